#include "twr/instance.hpp"

#include <stdexcept>

namespace twr {

Instance build_metric(int nodes, MetricKind kind, std::vector<Edge> edges) {
    if (nodes <= 0) throw std::invalid_argument("build_metric: need at least one node");
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= nodes || e.v < 0 || e.v >= nodes)
            throw std::invalid_argument("build_metric: edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("build_metric: self-loop");
        if (!(Rat(0) < e.w) || e.w.is_infinite())
            throw std::invalid_argument("build_metric: edge weight must be positive and finite");
    }
    if (kind == MetricKind::tree && static_cast<size_t>(nodes) != edges.size() + 1)
        throw std::invalid_argument("build_metric: a tree on n nodes has n-1 edges");

    Instance inst;
    inst.nodes = nodes;
    inst.kind = kind;
    inst.edges = std::move(edges);

    inst.dist.assign(nodes, std::vector<Rat>(nodes, Rat::infinity()));
    for (int i = 0; i < nodes; ++i) inst.dist[i][i] = Rat(0);
    for (const Edge& e : inst.edges) {
        Rat w = twr::min(inst.dist[e.u][e.v], e.w);
        inst.dist[e.u][e.v] = w;
        inst.dist[e.v][e.u] = w;
    }
    for (int k = 0; k < nodes; ++k)
        for (int i = 0; i < nodes; ++i) {
            if (inst.dist[i][k].is_infinite()) continue;
            for (int j = 0; j < nodes; ++j) {
                if (inst.dist[k][j].is_infinite()) continue;
                Rat via = inst.dist[i][k] + inst.dist[k][j];
                if (via < inst.dist[i][j]) inst.dist[i][j] = via;
            }
        }
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j)
            if (inst.dist[i][j].is_infinite())
                throw std::invalid_argument("build_metric: graph is disconnected");

    // For trees, n-1 edges plus connectivity rules out cycles, and the
    // closure above reduces to unique-path distances.
    return inst;
}

long long total_profit(const std::vector<Request>& requests) {
    long long sum = 0;
    for (const Request& r : requests) sum += r.profit;
    return sum;
}

}  // namespace twr
