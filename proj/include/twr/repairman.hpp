#pragma once

#include <map>
#include <vector>

#include "twr/instance.hpp"
#include "twr/pathsolver.hpp"
#include "twr/schedule.hpp"
#include "twr/trimming.hpp"

namespace twr {

enum class SolveMode { tree, graph };

// One partial run: ends by servicing its anchor request at `arrival`.
// Profit is the exact total over the run's events.
struct TableEntry {
    long long profit = 0;
    Rat arrival;
    Run run;
};

// State of the period sweep. `frontier[id]` holds the Pareto set of partial
// runs whose last event is request id (higher profit or earlier arrival,
// never both worse). `completed` holds runs that stopped inside a period
// instead of hopping onward.
struct ArrivalTable {
    std::map<int, std::vector<TableEntry>> frontier;
    std::vector<TableEntry> completed;
};

ArrivalTable init_arrival_table(const TrimmedInstance& trimmed);

// Extends every partial run anchored in period `period_pos` (an index into
// occupied_periods()): walks through the period's nodes collecting profit,
// then either stops there or hops to a request of a later period. Tree mode
// walks come from subtree sweeps; graph mode paths from the solver.
void process_period(const Instance& inst, const TrimmedInstance& trimmed, ArrivalTable& table,
                    int period_pos, SolveMode mode, PathSolver& solver);

// Full sweep plus extraction of the best run found. `solver` may be null in
// tree mode; graph mode defaults to the exact engine.
Run solve_repairman(const Instance& inst, const TrimmedInstance& trimmed, SolveMode mode,
                    PathSolver* solver = nullptr);

}  // namespace twr
