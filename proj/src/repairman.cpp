#include "twr/repairman.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "twr/profile.hpp"

namespace twr {
namespace {

// A within-period option: walk from the period's start node, end at
// `end_node`, servicing weight `covered` along the way. Later legs hop from
// end_node. Candidates are entry-independent, so they are built once per
// (period, start node).
struct WalkCandidate {
    int end_node = -1;
    Rat cost;
    long long covered = 0;
    std::vector<std::pair<int, Rat>> visits;  // first visits, offsets from walk start
};

// Per-period memo so repeated profit targets hit the underlying engine once.
class CachingSolver : public PathSolver {
public:
    explicit CachingSolver(PathSolver& base) : base_(base) {}

    PathResult solve(const Instance& inst, const std::vector<long long>& weight, int s, int t,
                     long long k) override {
        auto key = std::make_tuple(s, t, k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        PathResult r = base_.solve(inst, weight, s, t, k);
        memo_.emplace(key, r);
        return r;
    }

    long long profit_divisor() const override { return base_.profit_divisor(); }

private:
    struct KeyHash {
        size_t operator()(const std::tuple<int, int, long long>& k) const {
            auto [a, b, c] = k;
            return std::hash<long long>()((static_cast<long long>(a) << 40) ^
                                          (static_cast<long long>(b) << 20) ^ c);
        }
    };
    PathSolver& base_;
    std::unordered_map<std::tuple<int, int, long long>, PathResult, KeyHash> memo_;
};

void add_candidate(std::vector<WalkCandidate>& pool, WalkCandidate c) {
    for (auto& x : pool) {
        if (x.end_node == c.end_node && x.cost == c.cost) {
            if (c.covered > x.covered) x = std::move(c);
            return;
        }
    }
    pool.push_back(std::move(c));
}

WalkCandidate candidate_from_sequence(const Instance& inst, const std::vector<long long>& w,
                                      const std::vector<int>& seq, size_t take) {
    WalkCandidate c;
    Rat offset(0);
    std::vector<char> seen(inst.nodes, 0);
    for (size_t i = 0; i < take; ++i) {
        if (i > 0) offset += inst.d(seq[i - 1], seq[i]);
        if (!seen[seq[i]]) {
            seen[seq[i]] = 1;
            c.covered += w[seq[i]];
            c.visits.push_back({seq[i], offset});
        }
    }
    c.cost = offset;
    c.end_node = seq[take - 1];
    return c;
}

std::vector<WalkCandidate> build_candidates(const Instance& inst, const std::vector<long long>& w,
                                            int sigma, const std::vector<int>& period_nodes,
                                            const std::vector<int>& hop_nodes, long long max_p,
                                            SolveMode mode, PathSolver& solver) {
    std::vector<WalkCandidate> pool;
    if (mode == SolveMode::tree) {
        for (int x : period_nodes) {
            TreePathProfiler prof(inst, w, sigma, x);
            for (long long p = 0; p <= prof.profile().max_profit(); ++p) {
                WalkPlan plan = prof.plan(p);
                WalkCandidate c;
                c.end_node = plan.terminal;
                c.cost = plan.cost;
                c.covered = plan.covered_profit;
                c.visits = plan.visits;
                add_candidate(pool, std::move(c));
            }
        }
        return pool;
    }

    // Graph mode: solver paths ending inside the period, plus paths aimed
    // straight at a hop target with the final leg peeled off.
    for (int x : period_nodes) {
        for (long long p = 0; p <= max_p; ++p) {
            PathResult r = reduced_path(inst, w, sigma, x, p, solver);
            if (!r.achievable) break;
            add_candidate(pool, candidate_from_sequence(inst, w, r.nodes, r.nodes.size()));
        }
    }
    for (int tau : hop_nodes) {
        for (long long p = 0; p <= max_p; ++p) {
            PathResult r = reduced_path(inst, w, sigma, tau, p, solver);
            if (!r.achievable) break;
            size_t take = r.nodes.size() > 1 ? r.nodes.size() - 1 : r.nodes.size();
            add_candidate(pool, candidate_from_sequence(inst, w, r.nodes, take));
        }
    }
    return pool;
}

bool run_less(const Run& a, const Run& b) {
    if (a.events.size() != b.events.size()) return a.events.size() < b.events.size();
    for (size_t i = 0; i < a.events.size(); ++i) {
        if (a.events[i].request_id != b.events[i].request_id)
            return a.events[i].request_id < b.events[i].request_id;
        if (!(a.events[i].time == b.events[i].time)) return a.events[i].time < b.events[i].time;
    }
    return false;
}

void pareto_insert(std::vector<TableEntry>& list, TableEntry e) {
    for (auto it = list.begin(); it != list.end(); ++it) {
        if (it->profit >= e.profit && it->arrival <= e.arrival) {
            if (it->profit > e.profit || it->arrival < e.arrival) return;
            if (!run_less(e.run, it->run)) return;
            *it = std::move(e);
            return;
        }
    }
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](const TableEntry& x) {
                                  return x.profit <= e.profit && x.arrival >= e.arrival;
                              }),
               list.end());
    list.push_back(std::move(e));
}

}  // namespace

ArrivalTable init_arrival_table(const TrimmedInstance& trimmed) {
    ArrivalTable table;
    for (const auto& r : trimmed.requests) {
        const TrimEntry* e = trimmed.entry_for(r.id);
        if (!e || e->excluded) continue;
        TableEntry init;
        init.profit = r.profit;
        init.arrival = e->target.start;
        init.run.events.push_back({r.id, e->target.start});
        table.frontier[r.id].push_back(std::move(init));
    }
    return table;
}

void process_period(const Instance& inst, const TrimmedInstance& trimmed, ArrivalTable& table,
                    int period_pos, SolveMode mode, PathSolver& solver) {
    const std::vector<PeriodGroup> groups = trimmed.occupied_periods();
    const PeriodGroup& g = groups[period_pos];

    std::unordered_map<int, const Request*> by_id;
    for (const auto& r : trimmed.requests) by_id[r.id] = &r;

    std::vector<long long> w(inst.nodes, 0);
    long long max_p = 0;
    std::vector<std::vector<int>> at_node(inst.nodes);
    for (int rid : g.request_ids) {
        const Request* r = by_id.at(rid);
        w[r->node] += r->profit;
        max_p += r->profit;
        at_node[r->node].push_back(rid);
    }

    std::vector<int> period_nodes;
    for (int v = 0; v < inst.nodes; ++v)
        if (!at_node[v].empty()) period_nodes.push_back(v);
    std::vector<int> hop_nodes;
    {
        std::vector<char> seen(inst.nodes, 0);
        for (size_t pos2 = period_pos + 1; pos2 < groups.size(); ++pos2) {
            for (int rid : groups[pos2].request_ids) {
                int nd = by_id.at(rid)->node;
                if (!seen[nd]) {
                    seen[nd] = 1;
                    hop_nodes.push_back(nd);
                }
            }
        }
    }

    CachingSolver cached(solver);
    std::unordered_map<int, std::vector<WalkCandidate>> candidates_by_start;

    for (int rid : g.request_ids) {
        auto fit = table.frontier.find(rid);
        if (fit == table.frontier.end()) continue;
        const Request* start = by_id.at(rid);
        int sigma = start->node;

        auto cit = candidates_by_start.find(sigma);
        if (cit == candidates_by_start.end()) {
            cit = candidates_by_start
                      .emplace(sigma, build_candidates(inst, w, sigma, period_nodes, hop_nodes,
                                                       max_p, mode, cached))
                      .first;
        }
        const std::vector<WalkCandidate>& pool = cit->second;

        std::vector<TableEntry> snapshot = fit->second;
        for (const TableEntry& e : snapshot) {
            Rat a = max(e.arrival, g.begin);
            if (!(a < g.end)) continue;
            for (const WalkCandidate& c : pool) {
                if (!(a + c.cost < g.end)) continue;
                long long gain = c.covered - start->profit;

                std::vector<ServiceEvent> mid;
                for (const auto& [nd, off] : c.visits) {
                    for (int rid2 : at_node[nd]) {
                        if (rid2 == rid) continue;
                        mid.push_back({rid2, a + off});
                    }
                }

                if (gain > 0) {
                    TableEntry done;
                    done.profit = e.profit + gain;
                    done.arrival = a + c.cost;
                    done.run.events = e.run.events;
                    done.run.events.insert(done.run.events.end(), mid.begin(), mid.end());
                    table.completed.push_back(std::move(done));
                }

                for (size_t pos2 = period_pos + 1; pos2 < groups.size(); ++pos2) {
                    const PeriodGroup& g2 = groups[pos2];
                    for (int rid2 : g2.request_ids) {
                        const Request* target = by_id.at(rid2);
                        Rat arr = a + c.cost + inst.d(c.end_node, target->node);
                        arr = max(arr, g2.begin);
                        if (!(arr < g2.end)) continue;
                        TableEntry next;
                        next.profit = e.profit + gain + target->profit;
                        next.arrival = arr;
                        next.run.events = e.run.events;
                        next.run.events.insert(next.run.events.end(), mid.begin(), mid.end());
                        next.run.events.push_back({rid2, arr});
                        pareto_insert(table.frontier[rid2], std::move(next));
                    }
                }
            }
        }
    }
}

Run solve_repairman(const Instance& inst, const TrimmedInstance& trimmed, SolveMode mode,
                    PathSolver* solver) {
    if (mode == SolveMode::graph && inst.kind == MetricKind::tree) {
        // Allowed: a tree is a special graph.
    } else if (mode == SolveMode::tree && inst.kind != MetricKind::tree) {
        throw std::invalid_argument("tree mode requires a tree instance");
    }

    ExactPathSolver fallback;
    PathSolver& engine = solver ? *solver : fallback;

    ArrivalTable table = init_arrival_table(trimmed);
    const std::vector<PeriodGroup> groups = trimmed.occupied_periods();
    for (size_t pos = 0; pos < groups.size(); ++pos)
        process_period(inst, trimmed, table, static_cast<int>(pos), mode, engine);

    const TableEntry* best = nullptr;
    auto consider = [&](const TableEntry& e) {
        if (!best || e.profit > best->profit ||
            (e.profit == best->profit && run_less(e.run, best->run))) {
            best = &e;
        }
    };
    for (const auto& e : table.completed) consider(e);
    for (const auto& [rid, list] : table.frontier) {
        const TrimEntry* te = trimmed.entry_for(rid);
        for (const auto& e : list) {
            if (e.arrival < te->target.end) consider(e);
        }
    }

    Run out;
    if (best) out = best->run;
    out.speed = Rat(1);
    return out;
}

}  // namespace twr
