#pragma once

#include <vector>

#include "twr/deliveryman.hpp"
#include "twr/instance.hpp"
#include "twr/pathsolver.hpp"
#include "twr/repairman.hpp"
#include "twr/schedule.hpp"

namespace twr {

// One grid family of the enumeration: a period length, every distinct
// offset, and how many trim choices each offset carries.
struct Phase {
    Rat period_length;
    std::vector<Rat> offsets;
    long long trim_choices = 1;
};

std::vector<Phase> windowg_plan(int p, int g);

struct WindowSolveStats {
    long long solver_calls = 0;
};

// Best run over every (grid, offset, trim choice) combination of the
// (p, g) plan. Window lengths must lie in [1, 1 + p/2^g].
Run windowg(const Instance& inst, const std::vector<Request>& requests, int p, int g,
            SolveMode mode, PathSolver* solver = nullptr, WindowSolveStats* stats = nullptr);

// The 22-call driver for window lengths in [1, 2): the (2, 1) plan.
Run window12(const Instance& inst, const std::vector<Request>& requests, SolveMode mode,
             PathSolver* solver = nullptr, WindowSolveStats* stats = nullptr);

// Arbitrary lengths >= 1: partitions requests into geometric length
// classes, solves each class rescaled to [1, 1 + p/2^g), returns the best.
Run windowgd(const Instance& inst, const std::vector<Request>& requests, int p, int g,
             SolveMode mode, PathSolver* solver = nullptr, WindowSolveStats* stats = nullptr);

// Fraction of optimal profit carried by windows wholly containing 3..7
// half-periods. Must sum to one.
struct ProfitShares {
    Rat h3, h4, h5, h6, h7;
};

// Worst-case profit share the 22-call plan retains for a given split; the
// minimum over the simplex is 52/219, attained at every corner.
Rat evaluate_bound12(const ProfitShares& h);

// Guarantee constants of the enumeration driver per window-length bound.
Rat rho_for_window_size(int size);

// Bounded window lengths >= 1: trim to the earliest contained half-period
// and run the matching deliveryman solver for the metric kind.
Tour delivery_bounded(const Instance& inst, const std::vector<Request>& requests,
                      const Rat& epsilon);

}  // namespace twr
