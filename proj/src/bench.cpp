#include "twr/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "twr/io.hpp"
#include "twr/multiwindow.hpp"
#include "twr/repairman.hpp"
#include "twr/trimming.hpp"

namespace twr {
namespace {

const Rat kInfimumSlack = Rat(1) + Rat(1, 1000000000);

struct Family {
    std::string problem;
    std::string algorithm;
    RandomParams params;
    Rat bound;
};

std::vector<Family> families(const Rat& epsilon) {
    RandomParams tree_unit{5, MetricKind::tree, 4, Rat(1), Rat(1), 3};
    RandomParams tree_mixed{5, MetricKind::tree, 4, Rat(1), Rat(15, 8), 3};
    RandomParams graph_unit{5, MetricKind::graph, 4, Rat(1), Rat(1), 3};
    RandomParams graph_wide{5, MetricKind::graph, 4, Rat(1), Rat(3), 3};

    Rat eps_quarter = Rat(1) + epsilon / Rat(4);
    return {
        {"repairman", "trim+solve", tree_unit, Rat(3)},
        {"repairman", "window12", tree_mixed, Rat(219, 52)},
        {"deliveryman", "bisect-tree", tree_unit, (Rat(4) + epsilon) * kInfimumSlack},
        {"deliveryman", "walk-graph", graph_unit, Rat(8) * kInfimumSlack},
        {"deliveryman", "bisect-tree", tree_mixed, Rat(6) * eps_quarter * kInfimumSlack},
        {"deliveryman", "walk-graph", graph_wide, Rat(16) * kInfimumSlack},
    };
}

BenchRow run_row(const Family& fam, const InstanceFile& file, const Rat& epsilon,
                 const OracleBudget& budget) {
    BenchRow row;
    row.problem = fam.problem;
    row.algorithm = fam.algorithm;
    row.bound = fam.bound;

    auto start = std::chrono::steady_clock::now();
    try {
        if (fam.problem == "repairman") {
            long long got;
            if (fam.algorithm == "trim+solve") {
                TrimmedInstance trimmed = trim_unit(file.requests);
                Run run = solve_repairman(file.inst, trimmed,
                                          file.inst.kind == MetricKind::tree ? SolveMode::tree
                                                                             : SolveMode::graph);
                got = run_profit(file.requests, run);
            } else {
                Run run = window12(file.inst, file.requests,
                                   file.inst.kind == MetricKind::tree ? SolveMode::tree
                                                                      : SolveMode::graph);
                got = run_profit(file.requests, run);
            }
            long long best = brute_repairman(file.inst, file.requests, nullptr, budget).profit;
            row.achieved = Rat(got);
            row.oracle = Rat(best);
            row.ratio = got == 0 ? (best == 0 ? Rat(1) : Rat::infinity()) : Rat(best, got);
            row.pass = Rat(best) <= row.bound * Rat(got) || (best == 0 && got == 0);
        } else {
            Tour tour = delivery_bounded(file.inst, file.requests, epsilon);
            Rat opt = brute_deliveryman(file.inst, file.requests, nullptr, budget).speed;
            row.achieved = tour.run.speed;
            row.oracle = opt;
            row.ratio = opt == Rat(0) ? (row.achieved == Rat(0) ? Rat(1) : Rat::infinity())
                                      : row.achieved / opt;
            row.pass = row.achieved <= row.bound * opt || (opt == Rat(0) && row.achieved == Rat(0));
        }
    } catch (const BudgetExceeded&) {
        row.skipped = true;
    }
    row.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::string rat_label(const Rat& r) {
    if (r.is_infinite()) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", r.to_double());
    return buf;
}

}  // namespace

bool BenchReport::all_pass() const {
    for (const BenchRow& row : rows)
        if (!row.skipped && !row.pass) return false;
    return true;
}

BenchReport run_benchmark(const BenchSuite& suite) {
    std::vector<std::function<BenchRow()>> jobs;
    std::vector<Family> fams = families(suite.epsilon);
    for (size_t f = 0; f < fams.size(); ++f) {
        for (int i = 0; i < suite.instances_per_family; ++i) {
            InstanceFile file =
                generate_random(suite.seed + 1000 * f + i, fams[f].params);
            std::string id = "f" + std::to_string(f) + "i" + std::to_string(i);
            jobs.push_back([fam = fams[f], file = std::move(file), id, &suite]() {
                BenchRow row = run_row(fam, file, suite.epsilon, suite.budget);
                row.id = id;
                return row;
            });
        }
    }

    std::vector<BenchRow> rows(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t j = next.fetch_add(1); j < jobs.size(); j = next.fetch_add(1))
            rows[j] = jobs[j]();
    };
    unsigned pool = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();

    BenchReport report;
    report.rows = std::move(rows);
    return report;
}

std::string bench_table(const BenchReport& report) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-8s %-12s %-12s %10s %10s %8s %8s %-7s %8s\n", "id",
                  "problem", "algorithm", "achieved", "oracle", "ratio", "bound", "status",
                  "secs");
    out << line;
    for (const BenchRow& row : report.rows) {
        const char* status = row.skipped ? "skipped" : (row.pass ? "pass" : "FAIL");
        std::snprintf(line, sizeof(line), "%-8s %-12s %-12s %10s %10s %8s %8s %-7s %8.3f\n",
                      row.id.c_str(), row.problem.c_str(), row.algorithm.c_str(),
                      row.skipped ? "-" : rat_label(row.achieved).c_str(),
                      row.skipped ? "-" : rat_label(row.oracle).c_str(),
                      row.skipped ? "-" : rat_label(row.ratio).c_str(),
                      rat_label(row.bound).c_str(), status, row.wall_seconds);
        out << line;
    }
    int passed = 0, failed = 0, skipped = 0;
    for (const BenchRow& row : report.rows)
        (row.skipped ? skipped : (row.pass ? passed : failed))++;
    out << passed << " pass, " << failed << " fail, " << skipped << " skipped\n";
    return out.str();
}

std::string bench_machine(const BenchReport& report) {
    std::ostringstream out;
    out << "id\tproblem\talgorithm\tachieved\toracle\tratio\tbound\tstatus\n";
    for (const BenchRow& row : report.rows) {
        out << row.id << "\t" << row.problem << "\t" << row.algorithm << "\t";
        if (row.skipped)
            out << "-\t-\t-";
        else
            out << row.achieved.to_string() << "\t" << row.oracle.to_string() << "\t"
                << row.ratio.to_string();
        out << "\t" << row.bound.to_string() << "\t"
            << (row.skipped ? "skipped" : (row.pass ? "pass" : "fail")) << "\n";
    }
    return out.str();
}

}  // namespace twr
