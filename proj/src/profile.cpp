#include "twr/profile.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace twr {
namespace {

using Adjacency = std::vector<std::vector<std::pair<int, Rat>>>;

Adjacency build_adjacency(const Instance& inst) {
    Adjacency adj(inst.nodes);
    for (const auto& e : inst.edges) {
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
    }
    return adj;
}

std::vector<int> tree_path(const Adjacency& adj, int s, int t) {
    std::vector<int> parent(adj.size(), -2);
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (const auto& [v, w] : adj[u]) {
            (void)w;
            if (parent[v] == -2) {
                parent[v] = u;
                q.push(v);
            }
        }
    }
    if (parent[t] == -2) throw std::invalid_argument("nodes not connected");
    std::vector<int> path;
    for (int v = t; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// new[q] = min over a+b=q of base[a] + shifted[b], where shifted[0] = 0 and
// shifted[b] = child[b] + bump otherwise. Records the chosen split per q.
std::vector<Rat> merge_child(const std::vector<Rat>& base, const std::vector<Rat>& child,
                             const Rat& bump,
                             std::vector<std::pair<long long, long long>>& split) {
    long long na = static_cast<long long>(base.size()) - 1;
    long long nb = static_cast<long long>(child.size()) - 1;
    std::vector<Rat> out(na + nb + 1, Rat::infinity());
    split.assign(na + nb + 1, {0, 0});
    for (long long b = 0; b <= nb; ++b) {
        Rat sb = (b == 0) ? Rat(0) : child[b] + bump;
        for (long long a = 0; a <= na; ++a) {
            Rat v = base[a] + sb;
            if (v < out[a + b]) {
                out[a + b] = v;
                split[a + b] = {a, b};
            }
        }
    }
    return out;
}

}  // namespace

void TreePathProfiler::sweep(Node& u) const {
    u.list.assign(profit_[u.id] + 1, Rat(0));
    u.split.clear();
    for (auto& c : u.children) {
        sweep(c);
        std::vector<std::pair<long long, long long>> sp;
        u.list = merge_child(u.list, c.list, c.parent_edge + c.parent_edge, sp);
        u.split.push_back(std::move(sp));
    }
}

void TreePathProfiler::collect(const Node& u, long long p, std::vector<char>& included) const {
    included[u.id] = 1;
    long long cur = p;
    for (size_t j = u.children.size(); j-- > 0;) {
        auto [a, b] = u.split[j][cur];
        if (b > 0) collect(u.children[j], b, included);
        cur = a;
    }
}

void TreePathProfiler::emit_walk(const Node& u, const std::vector<char>& included, Rat& offset,
                                 WalkPlan& out) const {
    offset += u.parent_edge;
    out.visits.push_back({u.id, offset});
    for (const auto& c : u.children)
        if (included[c.id]) emit_walk(c, included, offset, out);
    offset += u.parent_edge;
}

TreePathProfiler::TreePathProfiler(const Instance& tree, std::vector<long long> node_profit,
                                   int s, int t)
    : inst_(tree), profit_(std::move(node_profit)) {
    if (tree.kind != MetricKind::tree) throw std::invalid_argument("tree instance required");
    if (static_cast<int>(profit_.size()) != tree.nodes)
        throw std::invalid_argument("profit vector size mismatch");
    Adjacency adj = build_adjacency(tree);
    path_ = tree_path(adj, s, t);
    on_path_.assign(tree.nodes, 0);
    for (int x : path_) on_path_[x] = 1;
    for (int x : path_) path_profit_ += profit_[x];

    // Hang every off-path subtree below its anchor, in path order.
    for (size_t pi = 0; pi < path_.size(); ++pi) {
        int x = path_[pi];
        for (const auto& [y, w] : adj[x]) {
            if (on_path_[y]) continue;
            Node sub;
            sub.id = y;
            sub.parent_edge = w;
            // Depth-first construction of the subtree rooted at y.
            struct Frame {
                Node* node;
                int parent;
            };
            std::vector<Frame> stack{{&sub, x}};
            while (!stack.empty()) {
                Frame f = stack.back();
                stack.pop_back();
                for (const auto& [z, wz] : adj[f.node->id]) {
                    if (z == f.parent) continue;
                    Node child;
                    child.id = z;
                    child.parent_edge = wz;
                    f.node->children.push_back(std::move(child));
                }
                for (auto& c : f.node->children) stack.push_back({&c, f.node->id});
            }
            hanging_.push_back(std::move(sub));
            hanging_anchor_.push_back(static_cast<int>(pi));
        }
    }

    root_list_.assign(path_profit_ + 1, Rat(0));
    for (auto& sub : hanging_) {
        sweep(sub);
        std::vector<std::pair<long long, long long>> sp;
        root_list_ = merge_child(root_list_, sub.list, sub.parent_edge + sub.parent_edge, sp);
        root_split_.push_back(std::move(sp));
    }

    Rat direct(0);
    for (size_t i = 0; i + 1 < path_.size(); ++i) direct += inst_.d(path_[i], path_[i + 1]);
    profile_.cost.reserve(root_list_.size());
    for (const auto& c : root_list_) profile_.cost.push_back(direct + c);
}

WalkPlan TreePathProfiler::plan(long long p) const {
    if (p < 0) p = 0;
    if (!profile_.achievable(p)) throw std::invalid_argument("profit target unachievable");

    std::vector<char> included(inst_.nodes, 0);
    long long cur = p;
    for (size_t j = hanging_.size(); j-- > 0;) {
        auto [a, b] = root_split_[j][cur];
        if (b > 0) collect(hanging_[j], b, included);
        cur = a;
    }

    WalkPlan out;
    Rat offset(0);
    for (size_t pi = 0; pi < path_.size(); ++pi) {
        if (pi > 0) offset += inst_.d(path_[pi - 1], path_[pi]);
        out.visits.push_back({path_[pi], offset});
        for (size_t j = 0; j < hanging_.size(); ++j) {
            if (hanging_anchor_[j] != static_cast<int>(pi)) continue;
            if (!included[hanging_[j].id]) continue;
            emit_walk(hanging_[j], included, offset, out);
        }
    }
    out.cost = offset;
    out.terminal = path_.back();
    for (int x : path_) included[x] = 1;
    for (int v = 0; v < inst_.nodes; ++v)
        if (included[v]) out.covered_profit += profit_[v];
    return out;
}

ProfitCostProfile sweep_tree(const Instance& tree, const std::vector<long long>& node_profit,
                             int root) {
    if (tree.kind != MetricKind::tree) throw std::invalid_argument("tree instance required");
    TreePathProfiler prof(tree, node_profit, root, root);
    return prof.profile();
}

ProfitCostProfile tree_path_profile(const Instance& tree,
                                    const std::vector<long long>& node_profit, int s, int t) {
    return TreePathProfiler(tree, node_profit, s, t).profile();
}

}  // namespace twr
