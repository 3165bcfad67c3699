#include "twr/oracle.hpp"

#include <algorithm>
#include <chrono>

namespace twr {
namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point at;
    long long counter = 0;

    explicit Deadline(double seconds)
        : at(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}

    void tick() {
        if ((++counter & 0x7ff) == 0 && Clock::now() > at)
            throw BudgetExceeded("oracle time budget exceeded");
    }
};

struct Candidate {
    int id;
    int node;
    Window window;
    long long profit;
    int cls;  // symmetry class; lower ids of the same class go first
};

// Two requests are interchangeable when they share window and profit and
// either sit at the same node, or their nodes are metric-symmetric and host
// nothing else. Any schedule stays feasible after swapping them, so the
// search only tries the id-ascending representative.
std::vector<int> symmetry_classes(const Instance& inst, const std::vector<Candidate>& cand) {
    int m = static_cast<int>(cand.size());
    std::vector<int> nodes_hosting(inst.nodes, 0);
    for (const auto& c : cand) ++nodes_hosting[c.node];

    auto interchangeable = [&](const Candidate& a, const Candidate& b) {
        if (!(a.window.start == b.window.start && a.window.end == b.window.end)) return false;
        if (a.profit != b.profit) return false;
        if (a.node == b.node) return true;
        if (nodes_hosting[a.node] != 1 || nodes_hosting[b.node] != 1) return false;
        for (int z = 0; z < inst.nodes; ++z) {
            if (z == a.node || z == b.node) continue;
            if (!(inst.d(a.node, z) == inst.d(b.node, z))) return false;
        }
        return true;
    };

    std::vector<int> cls(m, -1);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        if (cls[i] != -1) continue;
        cls[i] = next;
        for (int j = i + 1; j < m; ++j)
            if (cls[j] == -1 && interchangeable(cand[i], cand[j])) cls[j] = next;
        ++next;
    }
    return cls;
}

std::vector<Candidate> make_candidates(const std::vector<Request>& requests,
                                       const WindowMap* trimmed) {
    std::vector<Candidate> cand;
    for (const auto& r : requests) {
        Window w{r.start, r.window_end()};
        if (trimmed) {
            auto it = trimmed->find(r.id);
            if (it == trimmed->end()) continue;
            w = it->second;
        }
        if (r.profit <= 0) throw std::invalid_argument("request profit must be positive");
        cand.push_back({r.id, r.node, w, r.profit, 0});
    }
    std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
        return a.id < b.id;
    });
    return cand;
}

void check_budget(const Instance& inst, size_t request_count, const OracleBudget& budget) {
    if (inst.nodes > budget.max_nodes) throw BudgetExceeded("too many nodes for oracle");
    if (static_cast<int>(request_count) > budget.max_requests)
        throw BudgetExceeded("too many requests for oracle");
}

struct RepairSearch {
    const Instance& inst;
    const std::vector<Candidate>& cand;
    Deadline& deadline;
    long long total;
    long long best_profit = 0;
    std::vector<ServiceEvent> best_events;
    std::vector<ServiceEvent> current;
    std::vector<char> used;

    RepairSearch(const Instance& i, const std::vector<Candidate>& c, Deadline& d)
        : inst(i), cand(c), deadline(d) {
        total = 0;
        for (const auto& x : cand) total += x.profit;
        used.assign(cand.size(), 0);
    }

    bool done() const { return best_profit == total; }

    void dfs(int last_node, const Rat& now, long long profit) {
        deadline.tick();
        if (profit > best_profit) {
            best_profit = profit;
            best_events = current;
            if (done()) return;
        }

        // Requests whose windows have already closed can never be added.
        long long reachable = profit;
        if (current.empty()) {
            reachable = total;
        } else {
            for (size_t i = 0; i < cand.size(); ++i)
                if (!used[i] && now < cand[i].window.end) reachable += cand[i].profit;
        }
        if (reachable <= best_profit) return;

        std::vector<char> class_blocked(cand.size(), 0);
        for (size_t i = 0; i < cand.size(); ++i) {
            if (used[i]) continue;
            if (class_blocked[cand[i].cls]) continue;
            class_blocked[cand[i].cls] = 1;  // only the lowest unserviced id per class
            Rat t = current.empty()
                        ? cand[i].window.start
                        : max(cand[i].window.start, now + inst.d(last_node, cand[i].node));
            if (!(t < cand[i].window.end)) continue;
            used[i] = 1;
            current.push_back({cand[i].id, t});
            dfs(cand[i].node, t, profit + cand[i].profit);
            current.pop_back();
            used[i] = 0;
            if (done()) return;
        }
    }
};

}  // namespace

RepairmanOracleResult brute_repairman(const Instance& inst, const std::vector<Request>& requests,
                                      const WindowMap* trimmed, const OracleBudget& budget) {
    check_budget(inst, requests.size(), budget);
    std::vector<Candidate> cand = make_candidates(requests, trimmed);
    std::vector<int> cls = symmetry_classes(inst, cand);
    for (size_t i = 0; i < cand.size(); ++i) cand[i].cls = cls[i];

    Deadline deadline(budget.time_limit_seconds);
    RepairSearch search(inst, cand, deadline);
    search.dfs(-1, Rat(0), 0);

    RepairmanOracleResult out;
    out.profit = search.best_profit;
    out.run.events = std::move(search.best_events);
    out.run.speed = Rat(1);
    return out;
}

DeliverymanOracleResult brute_deliveryman(const Instance& inst,
                                          const std::vector<Request>& requests,
                                          const WindowMap* trimmed, const OracleBudget& budget) {
    check_budget(inst, requests.size(), budget);

    DeliverymanOracleResult out;
    out.speed = Rat::infinity();
    if (requests.empty()) {
        out.speed = Rat(0);
        return out;
    }
    if (trimmed) {
        for (const auto& r : requests)
            if (trimmed->find(r.id) == trimmed->end()) return out;  // unserviceable
    }

    std::vector<Candidate> cand = make_candidates(requests, trimmed);
    std::vector<int> cls = symmetry_classes(inst, cand);

    std::vector<int> perm(cand.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);

    Deadline deadline(budget.time_limit_seconds);
    std::vector<int> last_id_of_class(cand.size());
    do {
        deadline.tick();
        // Canonical order: within a symmetry class, ids must ascend.
        bool canonical = true;
        std::fill(last_id_of_class.begin(), last_id_of_class.end(), -1);
        for (int idx : perm) {
            int c = cls[idx];
            if (cand[idx].id < last_id_of_class[c]) {
                canonical = false;
                break;
            }
            last_id_of_class[c] = cand[idx].id;
        }
        if (!canonical) continue;

        std::vector<OrderItem> order;
        order.reserve(perm.size());
        for (int idx : perm)
            order.push_back({cand[idx].node, cand[idx].window.start, cand[idx].window.end});
        Rat s = fixed_order_min_speed(inst, order);
        if (s < out.speed) {
            out.speed = s;
            out.order.clear();
            for (int idx : perm) out.order.push_back(cand[idx].id);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ProfitCostProfile brute_path_profile(const Instance& inst, const std::vector<long long>& weight,
                                     int s, int t, const OracleBudget& budget) {
    if (inst.nodes > budget.max_nodes) throw BudgetExceeded("too many nodes for oracle");
    if (static_cast<int>(weight.size()) != inst.nodes)
        throw std::invalid_argument("weight vector size mismatch");

    std::vector<int> mids;
    for (int v = 0; v < inst.nodes; ++v)
        if (weight[v] > 0 && v != s && v != t) mids.push_back(v);

    long long base_profit = weight[s] + (t == s ? 0 : weight[t]);
    long long max_profit = base_profit;
    for (int v : mids) max_profit += weight[v];

    std::vector<Rat> best(max_profit + 1, Rat::infinity());
    Deadline deadline(budget.time_limit_seconds);

    // Enumerate s -> (ordered subset of mids) -> t.
    std::vector<char> used(mids.size(), 0);
    std::vector<int> seq;
    auto record = [&](const Rat& cost, long long profit) {
        if (cost < best[profit]) best[profit] = cost;
    };
    auto dfs = [&](auto&& self, int last, const Rat& cost, long long profit) -> void {
        deadline.tick();
        record(cost + inst.d(last, t), profit + base_profit - weight[s]);
        for (size_t i = 0; i < mids.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            self(self, mids[i], cost + inst.d(last, mids[i]), profit + weight[mids[i]]);
            used[i] = 0;
        }
    };
    dfs(dfs, s, Rat(0), weight[s]);

    // Close under "at least": cost[p] = cheapest way to reach profit >= p.
    ProfitCostProfile out;
    out.cost.assign(max_profit + 1, Rat::infinity());
    Rat running = Rat::infinity();
    for (long long p = max_profit; p >= 0; --p) {
        running = min(running, best[p]);
        out.cost[p] = running;
    }
    return out;
}

}  // namespace twr
