#include <random>

#include "doctest.h"
#include "testutil.hpp"
#include "twr/oracle.hpp"
#include "twr/repairman.hpp"
#include "twr/trimming.hpp"

using namespace twr;

TEST_CASE("the arrival table starts with one singleton run per request") {
    std::vector<Request> reqs = {{0, 0, Rat(3, 5), Rat(1), 1}};
    TrimmedInstance trimmed = trim_unit(reqs);
    ArrivalTable table = init_arrival_table(trimmed);
    REQUIRE(table.frontier.count(0) == 1);
    REQUIRE(table.frontier[0].size() == 1);
    const TableEntry& e = table.frontier[0][0];
    CHECK(e.profit == 1);
    CHECK(e.arrival == Rat(1));  // begin of the trimmed period
    REQUIRE(e.run.events.size() == 1);
    CHECK(e.run.events[0].time == Rat(1));
    CHECK(table.completed.empty());
}

TEST_CASE("processing a period pools co-located requests") {
    Instance lone = build_metric(1, MetricKind::tree, {});
    std::vector<Request> reqs = {{0, 0, Rat(3, 5), Rat(1), 1}, {1, 0, Rat(7, 10), Rat(1), 1}};
    TrimmedInstance trimmed = trim_unit(reqs);
    REQUIRE(trimmed.occupied_periods().size() == 1);

    ArrivalTable table = init_arrival_table(trimmed);
    ExactPathSolver exact;
    process_period(lone, trimmed, table, 0, SolveMode::tree, exact);

    bool found = false;
    for (const TableEntry& e : table.completed)
        if (e.profit == 2 && e.arrival == Rat(1)) found = true;
    CHECK(found);
}

TEST_CASE("both co-located requests are serviced in one visit") {
    Instance lone = build_metric(1, MetricKind::tree, {});
    std::vector<Request> reqs = {{0, 0, Rat(3, 5), Rat(1), 1}, {1, 0, Rat(7, 10), Rat(1), 1}};
    TrimmedInstance trimmed = trim_unit(reqs);
    Run run = solve_repairman(lone, trimmed, SolveMode::tree);
    CHECK(run_profit(reqs, run) == 2);
    WindowMap targets = trimmed.window_map();
    CHECK(verify_run(lone, reqs, run, &targets).feasible);
}

TEST_CASE("a long hop inside one period caps the profit at one") {
    Instance pair = build_metric(2, MetricKind::tree, {{0, 1, Rat(3)}});
    std::vector<Request> reqs = {{0, 0, Rat(0), Rat(1), 1}, {1, 1, Rat(0), Rat(1), 1}};
    TrimmedInstance trimmed = trim_unit(reqs);
    Run run = solve_repairman(pair, trimmed, SolveMode::tree);
    CHECK(run_profit(reqs, run) == 1);
}

TEST_CASE("a long hop across adjacent periods is just as hopeless") {
    Instance pair = build_metric(2, MetricKind::tree, {{0, 1, Rat(3)}});
    std::vector<Request> reqs = {{0, 0, Rat(0), Rat(1), 1}, {1, 1, Rat(1, 2), Rat(1), 1}};
    TrimmedInstance trimmed = trim_unit(reqs);
    Run run = solve_repairman(pair, trimmed, SolveMode::tree);
    CHECK(run_profit(reqs, run) == 1);
}

TEST_CASE("a slow chain across three periods is serviced whole") {
    Instance chain = build_metric(3, MetricKind::tree, {{0, 1, Rat(1, 8)}, {1, 2, Rat(1, 8)}});
    std::vector<Request> reqs = {{0, 0, Rat(0), Rat(1), 1},
                                 {1, 1, Rat(1, 2), Rat(1), 1},
                                 {2, 2, Rat(1), Rat(1), 1}};
    TrimmedInstance trimmed = trim_unit(reqs);
    Run run = solve_repairman(chain, trimmed, SolveMode::tree);
    CHECK(run_profit(reqs, run) == 3);
    WindowMap targets = trimmed.window_map();
    CHECK(verify_run(chain, reqs, run, &targets).feasible);
}

TEST_CASE("an empty request set yields an empty run") {
    Instance lone = build_metric(1, MetricKind::tree, {});
    TrimmedInstance trimmed = trim_unit({});
    Run run = solve_repairman(lone, trimmed, SolveMode::tree);
    CHECK(run.events.empty());
}

TEST_CASE("tree mode rejects graph instances") {
    Instance tri = build_metric(
        3, MetricKind::graph, {{0, 1, Rat(1)}, {1, 2, Rat(1)}, {0, 2, Rat(1)}});
    std::vector<Request> reqs = {{0, 0, Rat(0), Rat(1), 1}};
    TrimmedInstance trimmed = trim_unit(reqs);
    CHECK_THROWS_AS(solve_repairman(tri, trimmed, SolveMode::tree), std::invalid_argument);
}

TEST_CASE("tree mode finds the trimmed optimum on random instances") {
    std::mt19937_64 rng(83);
    for (int round = 0; round < 120; ++round) {
        Instance inst = random_tree(rng, 5);
        std::vector<Request> reqs = random_requests(rng, inst, 5, Rat(1));
        TrimmedInstance trimmed = trim_unit(reqs);
        Run run = solve_repairman(inst, trimmed, SolveMode::tree);

        WindowMap targets = trimmed.window_map();
        CHECK(verify_run(inst, reqs, run, &targets).feasible);
        CHECK(run_profit(reqs, run) == brute_repairman(inst, reqs, &targets).profit);
    }
}

TEST_CASE("graph mode with the exact engine also hits the trimmed optimum") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 80; ++round) {
        Instance inst = random_graph(rng, 5);
        std::vector<Request> reqs = random_requests(rng, inst, 5, Rat(1));
        TrimmedInstance trimmed = trim_unit(reqs);
        Run run = solve_repairman(inst, trimmed, SolveMode::graph);

        WindowMap targets = trimmed.window_map();
        CHECK(verify_run(inst, reqs, run, &targets).feasible);
        CHECK(run_profit(reqs, run) == brute_repairman(inst, reqs, &targets).profit);
    }
}

TEST_CASE("a half-profit path engine still collects half the trimmed optimum") {
    std::mt19937_64 rng(97);
    HalvedPathSolver halved;
    for (int round = 0; round < 60; ++round) {
        Instance inst = random_graph(rng, 5);
        std::vector<Request> reqs = random_requests(rng, inst, 5, Rat(1));
        TrimmedInstance trimmed = trim_unit(reqs);
        Run run = solve_repairman(inst, trimmed, SolveMode::graph, &halved);

        WindowMap targets = trimmed.window_map();
        CHECK(verify_run(inst, reqs, run, &targets).feasible);
        CHECK(2 * run_profit(reqs, run) >= brute_repairman(inst, reqs, &targets).profit);
    }
}

TEST_CASE("trim plus solve keeps a third of the untrimmed optimum") {
    std::mt19937_64 rng(101);
    for (int round = 0; round < 60; ++round) {
        Instance inst = random_tree(rng, 5);
        std::vector<Request> reqs = random_requests(rng, inst, 5, Rat(1));
        TrimmedInstance trimmed = trim_unit(reqs);
        Run run = solve_repairman(inst, trimmed, SolveMode::tree);
        CHECK(3 * run_profit(reqs, run) >= brute_repairman(inst, reqs).profit);
    }
}

TEST_CASE("the solver is deterministic") {
    std::mt19937_64 rng(103);
    for (int round = 0; round < 10; ++round) {
        Instance inst = random_tree(rng, 5);
        std::vector<Request> reqs = random_requests(rng, inst, 5, Rat(1));
        TrimmedInstance trimmed = trim_unit(reqs);
        Run a = solve_repairman(inst, trimmed, SolveMode::tree);
        Run b = solve_repairman(inst, trimmed, SolveMode::tree);
        REQUIRE(a.events.size() == b.events.size());
        for (size_t i = 0; i < a.events.size(); ++i) {
            CHECK(a.events[i].request_id == b.events[i].request_id);
            CHECK(a.events[i].time == b.events[i].time);
        }
    }
}
