#pragma once

#include <vector>

#include "twr/instance.hpp"
#include "twr/rational.hpp"

namespace twr {

struct PathResult {
    bool achievable = false;
    std::vector<int> nodes;  // node sequence, s first, t last
    Rat cost;
    long long profit = 0;    // total weight over distinct nodes of the sequence
};

// Cheapest simple s-to-t node sequence (in the metric closure) whose
// distinct-node weight reaches k. Subset DP over the positively weighted
// nodes plus the endpoints; at most 15 such nodes are accepted.
PathResult kssp_exact(const Instance& inst, const std::vector<long long>& weight, int s, int t,
                      long long k);

// Seam for plugging approximate profit-k path engines into the planners.
// profit_divisor() is the factor the returned profit may fall short by.
class PathSolver {
public:
    virtual ~PathSolver() = default;
    virtual PathResult solve(const Instance& inst, const std::vector<long long>& weight, int s,
                             int t, long long k) = 0;
    virtual long long profit_divisor() const = 0;
};

class ExactPathSolver : public PathSolver {
public:
    PathResult solve(const Instance& inst, const std::vector<long long>& weight, int s, int t,
                     long long k) override;
    long long profit_divisor() const override { return 1; }
};

// Deliberately lossy engine for exercising the degraded-guarantee analysis:
// answers profit-k queries with an exact run at ceil(k/2).
class HalvedPathSolver : public PathSolver {
public:
    PathResult solve(const Instance& inst, const std::vector<long long>& weight, int s, int t,
                     long long k) override;
    long long profit_divisor() const override { return 2; }
};

// Tries every weighted node pair (u, v) as inner endpoints, bridges with
// direct s-u and v-t hops, and keeps the cheapest combination. With the
// exact solver this reproduces kssp_exact; with a lossy solver the cost
// still never exceeds the exact profit-k optimum.
PathResult reduced_path(const Instance& inst, const std::vector<long long>& weight, int s, int t,
                        long long k, PathSolver& solver);

}  // namespace twr
