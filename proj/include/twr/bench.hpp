#pragma once

#include <string>
#include <vector>

#include "twr/oracle.hpp"
#include "twr/rational.hpp"

namespace twr {

struct BenchRow {
    std::string id;
    std::string problem;
    std::string algorithm;
    Rat achieved;
    Rat oracle;
    Rat ratio;
    Rat bound;
    bool pass = false;
    bool skipped = false;
    double wall_seconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    bool all_pass() const;
};

struct BenchSuite {
    unsigned long long seed = 7;
    Rat epsilon = Rat(1, 20);
    int instances_per_family = 4;
    OracleBudget budget;
};

// Solver-versus-oracle ratios over generated instances, one family per
// guarantee constant. Rows whose oracle blows the budget are kept and
// marked skipped. Rows run on a small worker pool; assembly order is
// fixed, so a report is reproducible apart from the timings.
BenchReport run_benchmark(const BenchSuite& suite);

// Human-readable table, timings included.
std::string bench_table(const BenchReport& report);

// Tab-separated rows without timings; byte-identical across runs with the
// same suite.
std::string bench_machine(const BenchReport& report);

}  // namespace twr
