#pragma once

#include <string>
#include <vector>

#include "twr/rational.hpp"

namespace twr {

enum class MetricKind { tree, graph };

struct Edge {
    int u = 0;
    int v = 0;
    Rat w;
};

// A demand at a node, valid during the half-open window
// [start, start + length). Several requests may share a node.
struct Request {
    int id = 0;
    int node = 0;
    Rat start;
    Rat length;
    long long profit = 1;

    Rat window_end() const { return start + length; }
    bool window_contains(const Rat& t) const { return start <= t && t < window_end(); }
};

struct Window {
    Rat start;
    Rat end;  // exclusive
    bool contains(const Rat& t) const { return start <= t && t < end; }
};

// Node set with an exact all-pairs distance table. For kind=tree the edges
// are the tree itself and distances follow unique paths; for kind=graph the
// table is the metric closure of the edge set.
struct Instance {
    int nodes = 0;
    MetricKind kind = MetricKind::tree;
    std::vector<Edge> edges;
    std::vector<std::vector<Rat>> dist;

    const Rat& d(int a, int b) const { return dist[a][b]; }
};

Instance build_metric(int nodes, MetricKind kind, std::vector<Edge> edges);

long long total_profit(const std::vector<Request>& requests);

}  // namespace twr
