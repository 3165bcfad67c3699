#pragma once

#include <random>
#include <vector>

#include "twr/instance.hpp"

namespace twr {

// Random weighted tree: node i > 0 hangs off a uniform earlier node with a
// small rational weight.
inline Instance random_tree(std::mt19937_64& rng, int nodes) {
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> num(1, 6);
    std::uniform_int_distribution<int> den_pick(0, 2);
    for (int i = 1; i < nodes; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        int den = 1 << den_pick(rng);
        edges.push_back({parent(rng), i, Rat(num(rng), den)});
    }
    return build_metric(nodes, MetricKind::tree, std::move(edges));
}

// Random connected graph: a tree plus about half as many extra edges.
inline Instance random_graph(std::mt19937_64& rng, int nodes) {
    std::vector<Edge> edges;
    std::uniform_int_distribution<int> num(1, 6);
    std::uniform_int_distribution<int> den_pick(0, 2);
    for (int i = 1; i < nodes; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        int den = 1 << den_pick(rng);
        edges.push_back({parent(rng), i, Rat(num(rng), den)});
    }
    if (nodes > 2) {
        std::uniform_int_distribution<int> any(0, nodes - 1);
        for (int extra = nodes / 2; extra > 0; --extra) {
            int a = any(rng), b = any(rng);
            if (a == b) continue;
            int den = 1 << den_pick(rng);
            edges.push_back({a, b, Rat(num(rng), den)});
        }
    }
    return build_metric(nodes, MetricKind::graph, std::move(edges));
}

// Requests with quarter-grid starts inside [0, horizon] and the given
// window length.
inline std::vector<Request> random_requests(std::mt19937_64& rng, const Instance& inst, int count,
                                            const Rat& length, int horizon = 3) {
    std::vector<Request> reqs;
    std::uniform_int_distribution<int> node(0, inst.nodes - 1);
    std::uniform_int_distribution<int> start(0, 4 * horizon);
    for (int i = 0; i < count; ++i)
        reqs.push_back({i, node(rng), Rat(start(rng), 4), length, 1});
    return reqs;
}

inline std::vector<Request> random_requests_mixed_len(std::mt19937_64& rng, const Instance& inst,
                                                      int count, int horizon = 3) {
    std::vector<Request> reqs;
    std::uniform_int_distribution<int> node(0, inst.nodes - 1);
    std::uniform_int_distribution<int> start(0, 4 * horizon);
    std::uniform_int_distribution<int> len_eighths(8, 15);  // [1, 2) in 1/8 steps
    for (int i = 0; i < count; ++i)
        reqs.push_back({i, node(rng), Rat(start(rng), 4), Rat(len_eighths(rng), 8), 1});
    return reqs;
}

}  // namespace twr
