#include "twr/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twr/bench.hpp"
#include "twr/io.hpp"
#include "twr/multiwindow.hpp"
#include "twr/oracle.hpp"
#include "twr/repairman.hpp"
#include "twr/trimming.hpp"

namespace twr {
namespace {

std::string read_text(const std::string& path) {
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

SolveMode mode_for(const Instance& inst, const std::string& override_mode) {
    if (override_mode == "tree") return SolveMode::tree;
    if (override_mode == "graph") return SolveMode::graph;
    return inst.kind == MetricKind::tree ? SolveMode::tree : SolveMode::graph;
}

int cmd_solve_repairman(const std::string& in_path, const std::string& out_path,
                        const std::string& mode_str, const std::vector<int>& pg) {
    InstanceFile file = parse_instance(read_text(in_path));
    SolveMode mode = mode_for(file.inst, mode_str);

    bool all_unit = true, all_short = true;
    for (const Request& r : file.requests) {
        if (r.length != Rat(1)) all_unit = false;
        if (!(r.length < Rat(2))) all_short = false;
        if (r.length < Rat(1))
            throw std::invalid_argument("window lengths below 1 are not supported");
    }

    Run run;
    if (file.requests.empty()) {
        // Nothing to serve; the empty run is optimal.
    } else if (all_unit) {
        run = solve_repairman(file.inst, trim_unit(file.requests), mode);
    } else if (all_short) {
        run = window12(file.inst, file.requests, mode);
    } else {
        run = windowgd(file.inst, file.requests, pg[0], pg[1], mode);
    }

    write_text(out_path, format_solution({SolutionKind::repairman, run}));
    std::cerr << "profit " << run_profit(file.requests, run) << " of "
              << total_profit(file.requests) << "\n";
    return 0;
}

int cmd_solve_deliveryman(const std::string& in_path, const std::string& out_path,
                          const Rat& epsilon) {
    InstanceFile file = parse_instance(read_text(in_path));
    if (file.requests.empty()) {
        write_text(out_path, format_solution({SolutionKind::deliveryman, Run{{}, Rat(0)}}));
        std::cerr << "speed 0\n";
        return 0;
    }
    Tour tour = delivery_bounded(file.inst, file.requests, epsilon);
    write_text(out_path, format_solution({SolutionKind::deliveryman, tour.run}));
    std::cerr << "speed " << tour.run.speed.to_string() << "\n";
    return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
    InstanceFile file = parse_instance(read_text(inst_path));
    SolutionFile sol = parse_solution(read_text(sol_path));

    bool require_all = sol.kind == SolutionKind::deliveryman;
    VerifyReport report = verify_run(file.inst, file.requests, sol.run, nullptr, require_all);
    for (const Violation& v : report.violations)
        std::cerr << violation_name(v.kind) << " (request " << v.request_id << "): " << v.detail
                  << "\n";
    if (!report.feasible) return 1;

    if (sol.kind == SolutionKind::repairman)
        std::cerr << "feasible, profit " << run_profit(file.requests, sol.run) << " of "
                  << total_profit(file.requests) << "\n";
    else
        std::cerr << "feasible at speed " << sol.run.speed.to_string() << ", covers all\n";
    return 0;
}

int cmd_oracle_repairman(const std::string& in_path, const std::string& out_path) {
    InstanceFile file = parse_instance(read_text(in_path));
    RepairmanOracleResult best = brute_repairman(file.inst, file.requests);
    write_text(out_path, format_solution({SolutionKind::repairman, best.run}));
    std::cerr << "optimal profit " << best.profit << " of " << total_profit(file.requests)
              << "\n";
    return 0;
}

int cmd_oracle_deliveryman(const std::string& in_path, const std::string& out_path) {
    InstanceFile file = parse_instance(read_text(in_path));
    if (file.requests.empty()) {
        write_text(out_path, format_solution({SolutionKind::deliveryman, Run{{}, Rat(0)}}));
        std::cerr << "optimal speed 0\n";
        return 0;
    }
    DeliverymanOracleResult best = brute_deliveryman(file.inst, file.requests);

    // The reported speed is an infimum; run a hair above it so the emitted
    // schedule is actually feasible.
    Rat speed = best.speed == Rat(0) ? Rat(0) : best.speed * Rat(1048577, 1048576);
    std::vector<OrderItem> order = order_from_requests(file.requests, best.order);
    auto times = simulate_order(file.inst, order, speed);
    if (!times) throw std::runtime_error("oracle order did not simulate at its own speed");

    Run run;
    run.speed = speed;
    for (size_t i = 0; i < best.order.size(); ++i)
        run.events.push_back({best.order[i], (*times)[i]});
    write_text(out_path, format_solution({SolutionKind::deliveryman, run}));
    std::cerr << "optimal speed " << best.speed.to_string() << " (emitted at "
              << speed.to_string() << ")\n";
    return 0;
}

int cmd_bench(unsigned long long seed, const Rat& epsilon, int rounds,
              const std::string& out_path) {
    BenchSuite suite;
    suite.seed = seed;
    suite.epsilon = epsilon;
    suite.instances_per_family = rounds;
    BenchReport report = run_benchmark(suite);
    std::cout << bench_table(report);
    if (!out_path.empty()) write_text(out_path, bench_machine(report));
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"traveling repairman and speeding deliveryman toolkit"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string out_path;
    std::string mode_str;
    std::string epsilon_str = "1/20";
    unsigned long long seed = 1;
    std::vector<int> pg = {2, 1};

    auto* gen = app.add_subcommand("gen", "generate instance files");
    gen->require_subcommand(1);

    auto* gen_random = gen->add_subcommand("random", "seeded random instance");
    int nodes = 8, requests = 6, horizon = 4;
    std::string len_lo = "1", len_hi = "1", kind_str = "tree";
    gen_random->add_option("--seed", seed);
    gen_random->add_option("--nodes", nodes);
    gen_random->add_option("--requests", requests);
    gen_random->add_option("--mode", kind_str)->check(CLI::IsMember({"tree", "graph"}));
    gen_random->add_option("--len-lo", len_lo, "shortest window length (>= 1)");
    gen_random->add_option("--len-hi", len_hi, "longest window length");
    gen_random->add_option("--horizon", horizon);
    gen_random->add_option("--out", out_path);

    auto* gen_partition = gen->add_subcommand("partition", "equal-split hardness gadget");
    std::vector<long long> values;
    gen_partition->add_option("values", values, "positive integers with an even sum")
        ->required();
    gen_partition->add_option("--out", out_path);

    auto* solve = app.add_subcommand("solve", "run a solver on an instance file");
    solve->require_subcommand(1);

    auto* solve_rep = solve->add_subcommand("repairman", "maximize served profit at speed 1");
    solve_rep->add_option("input", in_path, "instance file, '-' for stdin");
    solve_rep->add_option("--mode", mode_str)->check(CLI::IsMember({"tree", "graph"}));
    solve_rep->add_option("--pg", pg, "enumeration parameters p g")->expected(2);
    solve_rep->add_option("--out", out_path);

    auto* solve_del = solve->add_subcommand("deliveryman", "minimize the speed serving all");
    solve_del->add_option("input", in_path, "instance file, '-' for stdin");
    solve_del->add_option("--epsilon", epsilon_str, "tree-side accuracy");
    solve_del->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
    std::string sol_path;
    verify->add_option("instance", in_path)->required();
    verify->add_option("solution", sol_path)->required();

    auto* oracle = app.add_subcommand("oracle", "exhaustive reference solver (small inputs)");
    oracle->require_subcommand(1);
    auto* oracle_rep = oracle->add_subcommand("repairman", "optimal profit by brute force");
    oracle_rep->add_option("input", in_path);
    oracle_rep->add_option("--out", out_path);
    auto* oracle_del = oracle->add_subcommand("deliveryman", "optimal speed by brute force");
    oracle_del->add_option("input", in_path);
    oracle_del->add_option("--out", out_path);

    auto* bench = app.add_subcommand("bench", "solver-versus-oracle ratio report");
    int rounds = 4;
    bench->add_option("--seed", seed);
    bench->add_option("--epsilon", epsilon_str);
    bench->add_option("--rounds", rounds, "instances per family");
    bench->add_option("--out", out_path, "write the machine-readable table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen_random) {
            RandomParams params;
            params.nodes = nodes;
            params.kind = kind_str == "graph" ? MetricKind::graph : MetricKind::tree;
            params.requests = requests;
            params.min_length = Rat::parse(len_lo);
            params.max_length = Rat::parse(len_hi);
            params.horizon = horizon;
            InstanceFile file = generate_random(seed, params);
            write_text(out_path, format_instance(file.inst, file.requests));
            return 0;
        }
        if (*gen_partition) {
            InstanceFile file = generate_partition(values);
            write_text(out_path, format_instance(file.inst, file.requests));
            return 0;
        }
        if (*solve_rep) return cmd_solve_repairman(in_path, out_path, mode_str, pg);
        if (*solve_del) return cmd_solve_deliveryman(in_path, out_path, Rat::parse(epsilon_str));
        if (*verify) return cmd_verify(in_path, sol_path);
        if (*oracle_rep) return cmd_oracle_repairman(in_path, out_path);
        if (*oracle_del) return cmd_oracle_deliveryman(in_path, out_path);
        if (*bench) return cmd_bench(seed, Rat::parse(epsilon_str), rounds, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: oracle budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace twr
