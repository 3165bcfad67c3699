#include <random>

#include "doctest.h"
#include "testutil.hpp"
#include "twr/oracle.hpp"
#include "twr/pathsolver.hpp"
#include "twr/profile.hpp"

using namespace twr;

TEST_CASE("subtree sweep worked examples") {
    Instance lone = build_metric(1, MetricKind::tree, {});
    CHECK(sweep_tree(lone, {2}, 0).cost == std::vector<Rat>{Rat(0), Rat(0), Rat(0)});

    Instance pair = build_metric(2, MetricKind::tree, {{0, 1, Rat(3)}});
    CHECK(sweep_tree(pair, {1, 1}, 0).cost == std::vector<Rat>{Rat(0), Rat(0), Rat(6)});

    Instance star = build_metric(3, MetricKind::tree, {{0, 1, Rat(1)}, {0, 2, Rat(2)}});
    CHECK(sweep_tree(star, {0, 1, 1}, 0).cost == std::vector<Rat>{Rat(0), Rat(2), Rat(6)});
}

TEST_CASE("tree walk profiles match the exhaustive oracle") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> w(0, 2);
    for (int round = 0; round < 60; ++round) {
        Instance inst = random_tree(rng, 6);
        std::vector<long long> weight(inst.nodes);
        for (auto& x : weight) x = w(rng);
        for (int s = 0; s < inst.nodes; ++s)
            for (int t = 0; t < inst.nodes; ++t) {
                ProfitCostProfile mine = tree_path_profile(inst, weight, s, t);
                ProfitCostProfile ref = brute_path_profile(inst, weight, s, t);
                CHECK(mine.cost == ref.cost);
            }
    }
}

TEST_CASE("walk plans realize their profile entries") {
    std::mt19937_64 rng(47);
    std::uniform_int_distribution<int> w(0, 2);
    for (int round = 0; round < 40; ++round) {
        Instance inst = random_tree(rng, 6);
        std::vector<long long> weight(inst.nodes);
        for (auto& x : weight) x = w(rng);
        std::uniform_int_distribution<int> pick(0, inst.nodes - 1);
        int s = pick(rng), t = pick(rng);
        TreePathProfiler prof(inst, weight, s, t);
        for (long long p = 0; p <= prof.profile().max_profit(); ++p) {
            WalkPlan plan = prof.plan(p);
            CHECK(plan.cost == prof.profile().cost[p]);
            CHECK(plan.covered_profit >= p);
            CHECK(plan.terminal == t);
            REQUIRE_FALSE(plan.visits.empty());
            CHECK(plan.visits.front().first == s);
            CHECK(plan.visits.front().second == Rat(0));
            long long covered = 0;
            for (size_t i = 0; i < plan.visits.size(); ++i) {
                covered += weight[plan.visits[i].first];
                CHECK(plan.visits[i].second <= plan.cost);
                if (i > 0) {
                    Rat hop = plan.visits[i].second - plan.visits[i - 1].second;
                    CHECK(inst.d(plan.visits[i - 1].first, plan.visits[i].first) <= hop);
                }
            }
            CHECK(covered == plan.covered_profit);
        }
    }
}

TEST_CASE("cheapest profit-k paths on small fixtures") {
    Instance tri = build_metric(
        3, MetricKind::graph, {{0, 1, Rat(1)}, {1, 2, Rat(1)}, {0, 2, Rat(1)}});
    std::vector<long long> ones = {1, 1, 1};
    PathResult three = kssp_exact(tri, ones, 0, 1, 3);
    REQUIRE(three.achievable);
    CHECK(three.cost == Rat(2));
    CHECK(three.profit == 3);
    PathResult two = kssp_exact(tri, ones, 0, 1, 2);
    REQUIRE(two.achievable);
    CHECK(two.cost == Rat(1));

    Instance path = build_metric(3, MetricKind::tree, {{0, 1, Rat(1)}, {1, 2, Rat(1)}});
    PathResult chain = kssp_exact(path, ones, 0, 2, 3);
    REQUIRE(chain.achievable);
    CHECK(chain.cost == Rat(2));
    CHECK(chain.nodes == std::vector<int>{0, 1, 2});

    CHECK_FALSE(kssp_exact(path, ones, 0, 2, 4).achievable);
}

TEST_CASE("profit-k path results are internally consistent") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<int> w(0, 2);
    for (int round = 0; round < 40; ++round) {
        Instance inst = random_graph(rng, 6);
        std::vector<long long> weight(inst.nodes);
        for (auto& x : weight) x = w(rng);
        std::uniform_int_distribution<int> pick(0, inst.nodes - 1);
        int s = pick(rng), t = pick(rng);
        for (long long k = 1; k <= 5; ++k) {
            PathResult res = kssp_exact(inst, weight, s, t, k);
            if (!res.achievable) continue;
            REQUIRE_FALSE(res.nodes.empty());
            CHECK(res.nodes.front() == s);
            CHECK(res.nodes.back() == t);
            CHECK(res.profit >= k);
            Rat total(0);
            std::vector<char> seen(inst.nodes, 0);
            long long profit = 0;
            for (size_t i = 0; i < res.nodes.size(); ++i) {
                if (i > 0) total += inst.d(res.nodes[i - 1], res.nodes[i]);
                if (!seen[res.nodes[i]]) profit += weight[res.nodes[i]];
                seen[res.nodes[i]] = 1;
            }
            CHECK(total == res.cost);
            CHECK(profit == res.profit);
        }
    }
}

TEST_CASE("pair enumeration with the exact engine reproduces the exact answer") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> w(0, 2);
    ExactPathSolver exact;
    for (int round = 0; round < 40; ++round) {
        Instance inst = random_graph(rng, 6);
        std::vector<long long> weight(inst.nodes);
        for (auto& x : weight) x = w(rng);
        std::uniform_int_distribution<int> pick(0, inst.nodes - 1);
        int s = pick(rng), t = pick(rng);
        for (long long k = 1; k <= 4; ++k) {
            PathResult direct = kssp_exact(inst, weight, s, t, k);
            PathResult routed = reduced_path(inst, weight, s, t, k, exact);
            CHECK(direct.achievable == routed.achievable);
            if (direct.achievable) {
                CHECK(routed.cost == direct.cost);
                CHECK(routed.profit >= k);
            }
        }
    }
}

TEST_CASE("a single node holding the whole profit costs nothing") {
    Instance lone = build_metric(1, MetricKind::tree, {});
    ExactPathSolver exact;
    PathResult res = reduced_path(lone, {4}, 0, 0, 4, exact);
    REQUIRE(res.achievable);
    CHECK(res.cost == Rat(0));
    CHECK(res.profit == 4);
}

TEST_CASE("pair enumeration matches the brute profile at its profit level") {
    std::mt19937_64 rng(61);
    ExactPathSolver exact;
    for (int round = 0; round < 25; ++round) {
        Instance inst = random_graph(rng, 6);
        std::vector<long long> weight(inst.nodes, 1);
        std::uniform_int_distribution<int> pick(0, inst.nodes - 1);
        int s = pick(rng), t = pick(rng);
        ProfitCostProfile ref = brute_path_profile(inst, weight, s, t);
        PathResult res = reduced_path(inst, weight, s, t, 4, exact);
        REQUIRE(res.achievable == ref.achievable(4));
        if (res.achievable) CHECK(res.cost == ref.cost[4]);
    }
}

TEST_CASE("the halved engine answers with at least half the profit at no extra cost") {
    std::mt19937_64 rng(67);
    HalvedPathSolver halved;
    for (int round = 0; round < 30; ++round) {
        Instance inst = random_graph(rng, 6);
        std::vector<long long> weight(inst.nodes, 1);
        std::uniform_int_distribution<int> pick(0, inst.nodes - 1);
        int s = pick(rng), t = pick(rng);
        for (long long k = 1; k <= 5; ++k) {
            PathResult exact_res = kssp_exact(inst, weight, s, t, k);
            PathResult res = halved.solve(inst, weight, s, t, k);
            if (!exact_res.achievable) continue;
            REQUIRE(res.achievable);
            CHECK(2 * res.profit >= k);
            CHECK(res.cost <= exact_res.cost);
        }
    }
}
