#include <random>

#include "doctest.h"
#include "testutil.hpp"
#include "twr/oracle.hpp"
#include "twr/racing.hpp"

using namespace twr;

TEST_CASE("the zigzag pullback nets one unit per block") {
    for (int factor : {4, 6, 8}) {
        Rat f(factor);
        for (int b = 0; b < 5; ++b) {
            Rat block(b);
            CHECK(witness_sigma(block, f) == block - Rat(1, 2));
            CHECK(witness_sigma(block + Rat(1), f) == block + Rat(1, 2));
            // Crest of the forward leg, then back at the block start.
            CHECK(witness_sigma(block + Rat(1, 2), f) == block - Rat(1, 2) + f / Rat(2));
            Rat back_end = Rat(1) - Rat(1) / (Rat(2) * f);
            CHECK(witness_sigma(block + back_end, f) == Rat(b));
        }
    }
}

TEST_CASE("unit-window pullback identities at speed four") {
    for (int b = 0; b < 4; ++b) {
        Rat t(b);
        CHECK(witness_sigma(t, Rat(4)) == t - Rat(1, 2));
        CHECK(witness_sigma(t + Rat(7, 8), Rat(4)) == t);
    }
}

namespace {

// A feasible full tour from the deliveryman oracle, run slightly above the
// reported infimum.
Tour oracle_tour(const Instance& inst, const std::vector<Request>& reqs) {
    DeliverymanOracleResult res = brute_deliveryman(inst, reqs);
    REQUIRE_FALSE(res.speed.is_infinite());
    Rat exec = res.speed.is_zero() ? Rat(0) : res.speed * Rat(1048577, 1048576);
    std::vector<OrderItem> order = order_from_requests(reqs, res.order);
    auto times = simulate_order(inst, order, exec);
    REQUIRE(times.has_value());
    Tour tour;
    tour.covers_all = true;
    tour.run.speed = exec;
    for (size_t i = 0; i < res.order.size(); ++i)
        tour.run.events.push_back({res.order[i], (*times)[i]});
    return tour;
}

void check_witness(const Instance& inst, const std::vector<Request>& reqs,
                   const RacingWitness& w, const Rat& expect_factor) {
    CHECK(w.factor == expect_factor);
    Run fast;
    fast.speed = w.factor * w.base_speed;
    for (const WitnessEvent& ev : w.schedule) fast.events.push_back({ev.request_id, ev.time});
    VerifyReport rep = verify_run(inst, reqs, fast, &w.targets, true);
    CHECK(rep.feasible);
    for (size_t i = 1; i < w.schedule.size(); ++i) {
        Rat dt = w.schedule[i].time - w.schedule[i - 1].time;
        Rat dpos = w.schedule[i].arc_pos - w.schedule[i - 1].arc_pos;
        if (dpos.is_negative()) dpos = Rat(0) - dpos;
        CHECK(dpos <= fast.speed * dt);
    }
    // The witness really is at each request's node when it services it.
    for (const WitnessEvent& ev : w.schedule)
        CHECK(witness_position(w, ev.time) == ev.arc_pos);
}

}  // namespace

TEST_CASE("racing factors by window class") {
    Instance inst = build_metric(2, MetricKind::tree, {{0, 1, Rat(1, 4)}});
    std::vector<Request> unit_reqs = {{0, 0, Rat(0), Rat(1), 1}, {1, 1, Rat(1, 2), Rat(1), 1}};
    Tour base = oracle_tour(inst, unit_reqs);
    CHECK(racing_tour(inst, unit_reqs, base, WindowClass::make_unit()).factor == Rat(4));

    std::vector<Request> wide = {{0, 0, Rat(0), Rat(3, 2), 1}, {1, 1, Rat(1, 2), Rat(5, 4), 1}};
    Tour base2 = oracle_tour(inst, wide);
    CHECK(racing_tour(inst, wide, base2, WindowClass::make_one_to_two()).factor == Rat(6));

    std::vector<Request> spread = {{0, 0, Rat(0), Rat(3), 1}, {1, 1, Rat(1, 2), Rat(2), 1}};
    Tour base3 = oracle_tour(inst, spread);
    CHECK(racing_tour(inst, spread, base3, WindowClass::make_bounded(3)).factor == Rat(8));
}

TEST_CASE("racing a mismatched window class is rejected") {
    Instance inst = build_metric(1, MetricKind::tree, {});
    std::vector<Request> reqs = {{0, 0, Rat(0), Rat(3, 2), 1}};
    Tour base{{{{0, Rat(0)}}, Rat(1)}, true};
    CHECK_THROWS_AS(racing_tour(inst, reqs, base, WindowClass::make_unit()),
                    std::invalid_argument);
}

TEST_CASE("unit-window witnesses meet every trimmed window") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 20; ++round) {
        Instance inst = random_tree(rng, 4);
        std::vector<Request> reqs = random_requests(rng, inst, 4, Rat(1));
        Tour base = oracle_tour(inst, reqs);
        RacingWitness w = racing_tour(inst, reqs, base, WindowClass::make_unit());
        check_witness(inst, reqs, w, Rat(4));
    }
}

TEST_CASE("witnesses for window lengths up to two") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 20; ++round) {
        Instance inst = random_graph(rng, 4);
        std::vector<Request> reqs = random_requests_mixed_len(rng, inst, 4);
        Tour base = oracle_tour(inst, reqs);
        RacingWitness w = racing_tour(inst, reqs, base, WindowClass::make_one_to_two());
        check_witness(inst, reqs, w, Rat(6));
    }
}

TEST_CASE("witnesses for window lengths up to a declared ratio") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 20; ++round) {
        Instance inst = random_graph(rng, 4);
        std::vector<Request> reqs = random_requests(rng, inst, 4, Rat(1));
        std::uniform_int_distribution<int> len_quarters(4, 12);  // lengths in [1, 3]
        for (Request& r : reqs) r.length = Rat(len_quarters(rng), 4);
        Tour base = oracle_tour(inst, reqs);
        RacingWitness w = racing_tour(inst, reqs, base, WindowClass::make_bounded(3));
        check_witness(inst, reqs, w, Rat(8));
    }
}

TEST_CASE("witness position at even period starts trails by half a period") {
    Instance inst = build_metric(2, MetricKind::tree, {{0, 1, Rat(1, 2)}});
    std::vector<Request> reqs = {{0, 0, Rat(0), Rat(1), 1}, {1, 1, Rat(1), Rat(1), 1}};
    Tour base = oracle_tour(inst, reqs);
    RacingWitness w = racing_tour(inst, reqs, base, WindowClass::make_unit());
    for (int j = 0; j < 4; ++j)
        CHECK(witness_position(w, Rat(j)) == base_position(w, Rat(j) - Rat(1, 2)));
}
