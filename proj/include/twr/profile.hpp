#pragma once

#include <utility>
#include <vector>

#include "twr/instance.hpp"
#include "twr/rational.hpp"

namespace twr {

// cost[p] = minimum cost of collecting total node profit at least p; always
// non-decreasing, with cost[0] the cheapest option overall. Profits beyond
// the vector are unachievable.
struct ProfitCostProfile {
    std::vector<Rat> cost;

    long long max_profit() const { return static_cast<long long>(cost.size()) - 1; }
    bool achievable(long long p) const { return p <= max_profit(); }
    bool operator==(const ProfitCostProfile& o) const { return cost == o.cost; }
};

// A concrete walk: nodes in visiting order with the distance offset of each
// node's first visit. Starts at offset 0, ends at the walk's total cost.
struct WalkPlan {
    Rat cost;
    long long covered_profit = 0;
    int terminal = -1;                        // node the walk stops at
    std::vector<std::pair<int, Rat>> visits;  // (node, first-visit offset)
};

// Cheapest closed-walk detour costs from `root` into its tree: the profile
// of "collect profit p from the subtrees and come back". The root's own
// profit is free.
ProfitCostProfile sweep_tree(const Instance& tree, const std::vector<long long>& node_profit,
                             int root);

// Minimum-length s-to-t walks on a tree for every achievable profit,
// with reconstruction. Costs include the direct s-t distance; detours off
// the direct path are doubled.
class TreePathProfiler {
public:
    TreePathProfiler(const Instance& tree, std::vector<long long> node_profit, int s, int t);

    const ProfitCostProfile& profile() const { return profile_; }
    // A walk achieving profit >= p at cost profile()[p]. The visit order
    // follows the direct path, detouring into chosen subtrees on the way.
    WalkPlan plan(long long p) const;

private:
    struct Node {
        int id = -1;
        Rat parent_edge;
        std::vector<Node> children;
        std::vector<Rat> list;
        // One table per merge step: split[j][q] = (profit from the state
        // before child j, profit bought from child j's shifted list).
        std::vector<std::vector<std::pair<long long, long long>>> split;
    };

    void sweep(Node& u) const;
    void collect(const Node& u, long long p, std::vector<char>& included) const;
    void emit_walk(const Node& u, const std::vector<char>& included, Rat& offset,
                   WalkPlan& out) const;

    const Instance& inst_;
    std::vector<long long> profit_;
    std::vector<int> path_;           // direct s..t node sequence
    std::vector<char> on_path_;
    std::vector<Node> hanging_;       // subtrees off the path, in path order
    std::vector<int> hanging_anchor_; // index into path_ per hanging subtree
    std::vector<std::vector<std::pair<long long, long long>>> root_split_;
    std::vector<Rat> root_list_;
    ProfitCostProfile profile_;
    long long path_profit_ = 0;
};

// Convenience wrapper: the full s-to-t profile on a tree.
ProfitCostProfile tree_path_profile(const Instance& tree,
                                    const std::vector<long long>& node_profit, int s, int t);

}  // namespace twr
