#include "twr/multiwindow.hpp"

#include <stdexcept>

#include "twr/trimming.hpp"

namespace twr {
namespace {

long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void check_lengths(const std::vector<Request>& requests, const Rat& lo, const Rat& hi,
                   bool hi_inclusive) {
    for (const Request& r : requests) {
        bool ok = lo <= r.length && (hi_inclusive ? r.length <= hi : r.length < hi);
        if (!ok)
            throw std::invalid_argument("window length " + r.length.to_string() +
                                        " outside the supported range");
    }
}

Run best_of(const std::vector<Request>& requests, Run best, Run cand) {
    if (run_profit(requests, cand) > run_profit(requests, best)) return cand;
    return best;
}

}  // namespace

std::vector<Phase> windowg_plan(int p, int g) {
    if (p < 1 || g < 1) throw std::invalid_argument("windowg_plan: need p >= 1 and g >= 1");
    if (p + g > 20) throw std::invalid_argument("windowg_plan: p + g too large for 64-bit counts");
    Rat q(1, 1LL << (g + 1));
    std::vector<Phase> plan;
    for (int i = 0; i <= p; ++i) {
        Phase phase;
        int starts = i + (1 << g);
        phase.period_length = Rat(starts) * q;
        for (int j = 0; j < starts; ++j) phase.offsets.push_back(Rat(j) * q);
        phase.trim_choices = factorial(p + g - i);
        plan.push_back(std::move(phase));
    }
    return plan;
}

Run windowg(const Instance& inst, const std::vector<Request>& requests, int p, int g,
            SolveMode mode, PathSolver* solver, WindowSolveStats* stats) {
    check_lengths(requests, Rat(1), Rat(1) + Rat(p, 1LL << g), true);

    const std::vector<Phase> plan = windowg_plan(p, g);
    Run best;
    for (int i = 0; i <= p; ++i) {
        const Phase& phase = plan[i];
        int width = p + g - i - 1;
        for (const Rat& offset : phase.offsets) {
            for (long long k = 0; k < phase.trim_choices; ++k) {
                TrimmedInstance trimmed = trim_general(
                    requests, PeriodGrid{phase.period_length, offset},
                    factorial_encode(k, width));
                Run run = solve_repairman(inst, trimmed, mode, solver);
                if (stats) ++stats->solver_calls;
                best = best_of(requests, std::move(best), std::move(run));
            }
        }
    }
    return best;
}

Run window12(const Instance& inst, const std::vector<Request>& requests, SolveMode mode,
             PathSolver* solver, WindowSolveStats* stats) {
    check_lengths(requests, Rat(1), Rat(2), false);

    const std::vector<Phase> plan = windowg_plan(2, 1);
    bool as_published = plan.size() == 3 && plan[0].period_length == Rat(1, 2) &&
                        plan[0].offsets == std::vector<Rat>{Rat(0), Rat(1, 4)} &&
                        plan[0].trim_choices == 6 && plan[1].period_length == Rat(3, 4) &&
                        plan[1].offsets == std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1, 2)} &&
                        plan[1].trim_choices == 2 && plan[2].period_length == Rat(1) &&
                        plan[2].offsets ==
                            std::vector<Rat>{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)} &&
                        plan[2].trim_choices == 1;
    if (!as_published) throw std::logic_error("window12: the (2,1) plan drifted");

    return windowg(inst, requests, 2, 1, mode, solver, stats);
}

Run windowgd(const Instance& inst, const std::vector<Request>& requests, int p, int g,
             SolveMode mode, PathSolver* solver, WindowSolveStats* stats) {
    if (requests.empty()) throw std::invalid_argument("windowgd: no requests");
    check_lengths(requests, Rat(1), Rat::infinity(), false);
    if (p < 1 || g < 1) throw std::invalid_argument("windowgd: need p >= 1 and g >= 1");

    Rat b = Rat(1) + Rat(p, 1LL << g);

    // Class r holds lengths in [b^r, b^(r+1)); scaling by b^-r maps it to
    // [1, b), where the plan applies.
    std::vector<Rat> scales;
    std::vector<std::vector<Request>> classes;
    for (const Request& r : requests) {
        Rat pow(1);
        size_t cls = 0;
        while (!(r.length < pow * b)) {
            pow *= b;
            ++cls;
        }
        if (classes.size() <= cls) {
            classes.resize(cls + 1);
            scales.resize(cls + 1);
        }
        scales[cls] = pow;
        classes[cls].push_back(r);
    }

    Run best;
    for (size_t cls = 0; cls < classes.size(); ++cls) {
        if (classes[cls].empty()) continue;
        const Rat& pow = scales[cls];

        Instance scaled = inst;
        for (Edge& e : scaled.edges) e.w = e.w / pow;
        for (auto& row : scaled.dist)
            for (Rat& d : row) d = d / pow;

        std::vector<Request> reqs = classes[cls];
        for (Request& r : reqs) {
            r.start = r.start / pow;
            r.length = r.length / pow;
        }

        Run run = windowg(scaled, reqs, p, g, mode, solver, stats);
        for (ServiceEvent& ev : run.events) ev.time = ev.time * pow;
        best = best_of(requests, std::move(best), std::move(run));
    }
    return best;
}

Rat evaluate_bound12(const ProfitShares& h) {
    const Rat* shares[] = {&h.h3, &h.h4, &h.h5, &h.h6, &h.h7};
    Rat sum(0);
    for (const Rat* s : shares) {
        if (s->is_negative() || s->is_infinite())
            throw std::invalid_argument("evaluate_bound12: shares must be nonnegative");
        sum += *s;
    }
    if (sum != Rat(1)) throw std::invalid_argument("evaluate_bound12: shares must sum to 1");

    Rat b1 = h.h3 / Rat(3) + Rat(7) * h.h4 / Rat(24) + h.h5 / Rat(4) + Rat(9) * h.h6 / Rat(40) +
             h.h7 / Rat(5);
    Rat b2 = h.h3 / Rat(9) + Rat(2) * h.h4 / Rat(9) + h.h5 / Rat(3) + Rat(11) * h.h6 / Rat(36) +
             Rat(5) * h.h7 / Rat(18);
    Rat b3 = h.h4 / Rat(12) + h.h5 / Rat(6) + h.h6 / Rat(4) + h.h7 / Rat(3);
    return Rat(50, 73) * b1 + Rat(6, 73) * b2 + Rat(17, 73) * b3;
}

Rat rho_for_window_size(int size) {
    switch (size) {
        case 2: return Rat(52, 219);
        case 3: return Rat(4954, 24619);
        case 4: return Rat(258044, 1427019);
    }
    throw std::invalid_argument("rho_for_window_size: tabulated for sizes 2, 3, 4 only");
}

Tour delivery_bounded(const Instance& inst, const std::vector<Request>& requests,
                      const Rat& epsilon) {
    check_lengths(requests, Rat(1), Rat::infinity(), false);
    TrimmedInstance trimmed = trim_earliest_half(requests);
    if (inst.kind == MetricKind::tree) return delivery_tree(inst, trimmed, epsilon).tour;
    return delivery_graph(inst, trimmed).tour;
}

}  // namespace twr
