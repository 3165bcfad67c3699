#include "twr/pathsolver.hpp"

#include <algorithm>
#include <stdexcept>

namespace twr {
namespace {

long long popcount(unsigned mask) { return __builtin_popcount(mask); }

std::vector<int> relevant_nodes(const Instance& inst, const std::vector<long long>& weight,
                                int s, int t) {
    if (s < 0 || s >= inst.nodes || t < 0 || t >= inst.nodes)
        throw std::invalid_argument("endpoint out of range");
    if (static_cast<int>(weight.size()) != inst.nodes)
        throw std::invalid_argument("weight vector size mismatch");
    std::vector<int> rel;
    for (int v = 0; v < inst.nodes; ++v) {
        if (weight[v] > 0 || v == s || v == t) rel.push_back(v);
    }
    return rel;
}

}  // namespace

PathResult kssp_exact(const Instance& inst, const std::vector<long long>& weight, int s, int t,
                      long long k) {
    std::vector<int> rel = relevant_nodes(inst, weight, s, t);
    if (rel.size() > 15) throw std::invalid_argument("too many weighted nodes");

    // t stays out of the DP unless it coincides with s; its weight and the
    // final hop are added when a candidate is closed off.
    std::vector<int> base;
    for (int v : rel)
        if (v != t || v == s) base.push_back(v);
    int n = static_cast<int>(base.size());
    int sidx = -1;
    for (int i = 0; i < n; ++i)
        if (base[i] == s) sidx = i;

    unsigned full = 1u << n;
    std::vector<std::vector<Rat>> dp(full, std::vector<Rat>(n, Rat::infinity()));
    std::vector<std::vector<int>> parent(full, std::vector<int>(n, -1));
    dp[1u << sidx][sidx] = Rat(0);
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!(mask & (1u << sidx))) continue;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i)) || dp[mask][i].is_infinite()) continue;
            for (int j = 0; j < n; ++j) {
                if (mask & (1u << j)) continue;
                Rat nd = dp[mask][i] + inst.d(base[i], base[j]);
                unsigned nm = mask | (1u << j);
                if (nd < dp[nm][j]) {
                    dp[nm][j] = nd;
                    parent[nm][j] = i;
                }
            }
        }
    }

    std::vector<long long> wsum(full, 0);
    for (unsigned mask = 1; mask < full; ++mask) {
        unsigned low = mask & (mask - 1);
        int bit = __builtin_ctz(mask ^ low);
        wsum[mask] = wsum[low] + weight[base[bit]];
    }
    long long tail = (t == s) ? 0 : weight[t];

    bool found = false;
    Rat best_cost;
    long long best_profit = 0;
    unsigned best_mask = 0;
    int best_end = -1;
    for (unsigned mask = 1; mask < full; ++mask) {
        if (!(mask & (1u << sidx))) continue;
        for (int i = 0; i < n; ++i) {
            if (!(mask & (1u << i)) || dp[mask][i].is_infinite()) continue;
            long long profit = wsum[mask] + tail;
            if (profit < k) continue;
            Rat cost = dp[mask][i] + inst.d(base[i], t);
            bool better = !found || cost < best_cost ||
                          (cost == best_cost && profit > best_profit) ||
                          (cost == best_cost && profit == best_profit &&
                           popcount(mask) < popcount(best_mask));
            if (better) {
                found = true;
                best_cost = cost;
                best_profit = profit;
                best_mask = mask;
                best_end = i;
            }
        }
    }

    PathResult out;
    if (!found) {
        out.cost = Rat::infinity();
        return out;
    }
    out.achievable = true;
    out.cost = best_cost;
    out.profit = best_profit;
    std::vector<int> seq;
    unsigned mask = best_mask;
    for (int i = best_end; i != -1;) {
        seq.push_back(base[i]);
        int p = parent[mask][i];
        mask &= ~(1u << i);
        i = p;
    }
    std::reverse(seq.begin(), seq.end());
    if (t != s) {
        seq.push_back(t);
    } else if (seq.size() > 1) {
        seq.push_back(s);
    }
    out.nodes = std::move(seq);
    return out;
}

PathResult ExactPathSolver::solve(const Instance& inst, const std::vector<long long>& weight,
                                  int s, int t, long long k) {
    return kssp_exact(inst, weight, s, t, k);
}

PathResult HalvedPathSolver::solve(const Instance& inst, const std::vector<long long>& weight,
                                   int s, int t, long long k) {
    long long relaxed = k <= 0 ? 0 : (k + 1) / 2;
    return kssp_exact(inst, weight, s, t, relaxed);
}

PathResult reduced_path(const Instance& inst, const std::vector<long long>& weight, int s, int t,
                        long long k, PathSolver& solver) {
    std::vector<int> rel = relevant_nodes(inst, weight, s, t);

    PathResult best;
    best.cost = Rat::infinity();
    for (int u : rel) {
        for (int v : rel) {
            PathResult inner = solver.solve(inst, weight, u, v, k);
            if (!inner.achievable) continue;
            Rat total = inst.d(s, u) + inner.cost + inst.d(v, t);

            std::vector<int> seq;
            seq.push_back(s);
            for (int x : inner.nodes)
                if (seq.back() != x) seq.push_back(x);
            if (seq.back() != t) seq.push_back(t);

            long long profit = 0;
            std::vector<char> seen(inst.nodes, 0);
            for (int x : seq) {
                if (!seen[x]) profit += weight[x];
                seen[x] = 1;
            }
            bool better = !best.achievable || total < best.cost ||
                          (total == best.cost && profit > best.profit);
            if (better) {
                best.achievable = true;
                best.cost = total;
                best.profit = profit;
                best.nodes = std::move(seq);
            }
        }
    }
    return best;
}

}  // namespace twr
