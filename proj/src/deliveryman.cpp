#include "twr/deliveryman.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "twr/profile.hpp"

namespace twr {
namespace {

// Weight of the minimal subtree spanning `set`: an edge counts when it
// separates two set nodes.
Rat steiner_weight(const Instance& tree, const std::vector<int>& set) {
    if (set.empty()) return Rat(0);
    std::vector<std::vector<std::pair<int, Rat>>> adj(tree.nodes);
    for (const auto& e : tree.edges) {
        adj[e.u].push_back({e.v, e.w});
        adj[e.v].push_back({e.u, e.w});
    }
    std::vector<char> in_set(tree.nodes, 0);
    for (int v : set) in_set[v] = 1;
    int total = 0;
    for (int v = 0; v < tree.nodes; ++v) total += in_set[v];

    std::vector<int> parent(tree.nodes, -2), order;
    std::vector<Rat> parent_w(tree.nodes);
    parent[set[0]] = -1;
    std::queue<int> q;
    q.push(set[0]);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (const auto& [v, w] : adj[u]) {
            if (parent[v] == -2) {
                parent[v] = u;
                parent_w[v] = w;
                q.push(v);
            }
        }
    }

    std::vector<int> cnt(tree.nodes, 0);
    Rat weight(0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        cnt[x] += in_set[x];
        if (parent[x] >= 0) {
            if (cnt[x] > 0 && cnt[x] < total) weight += parent_w[x];
            cnt[parent[x]] += cnt[x];
        }
    }
    return weight;
}

struct PeriodData {
    PeriodGroup group;
    std::vector<int> nodes;                       // distinct request nodes, ascending
    std::unordered_map<int, std::vector<int>> requests_at;  // node -> request ids
};

std::vector<PeriodData> prepare_periods(const Instance& inst, const TrimmedInstance& trimmed) {
    std::unordered_map<int, const Request*> by_id;
    for (const auto& r : trimmed.requests) by_id[r.id] = &r;
    for (const auto& r : trimmed.requests) {
        const TrimEntry* e = trimmed.entry_for(r.id);
        if (!e || e->excluded)
            throw std::invalid_argument("request excluded by trimming; every request must stay");
    }

    std::vector<PeriodData> out;
    for (const auto& g : trimmed.occupied_periods()) {
        PeriodData pd;
        pd.group = g;
        for (int rid : g.request_ids) {
            int nd = by_id.at(rid)->node;
            if (nd < 0 || nd >= inst.nodes) throw std::invalid_argument("node out of range");
            pd.requests_at[nd].push_back(rid);
        }
        for (const auto& [nd, ids] : pd.requests_at) pd.nodes.push_back(nd);
        std::sort(pd.nodes.begin(), pd.nodes.end());
        out.push_back(std::move(pd));
    }
    return out;
}

// Service every request of the period along a walk schedule: requests at a
// node fire at its first visit.
void emit_period_events(const PeriodData& pd,
                        const std::vector<std::pair<int, Rat>>& touches, const Rat& start_time,
                        const Rat& speed, std::vector<ServiceEvent>& events) {
    std::map<int, char> seen;
    for (const auto& [nd, off] : touches) {
        if (seen[nd]) continue;
        seen[nd] = 1;
        auto it = pd.requests_at.find(nd);
        if (it == pd.requests_at.end()) continue;
        Rat t = start_time + travel_time(off, speed);
        for (int rid : it->second) events.push_back({rid, t});
    }
}

// ----- minimum spanning trees over the metric, per period -----

struct Mst {
    // adjacency inside the MST, neighbors ascending
    std::map<int, std::vector<std::pair<int, Rat>>> adj;
    Rat weight;
};

Mst build_mst(const Instance& inst, const std::vector<int>& nodes) {
    Mst mst;
    for (int v : nodes) mst.adj[v];
    if (nodes.size() <= 1) return mst;

    std::vector<char> used(nodes.size(), 0);
    std::vector<Rat> key(nodes.size(), Rat::infinity());
    std::vector<int> from(nodes.size(), -1);
    key[0] = Rat(0);
    for (size_t round = 0; round < nodes.size(); ++round) {
        int pick = -1;
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (used[i]) continue;
            if (pick == -1 || key[i] < key[pick]) pick = static_cast<int>(i);
        }
        used[pick] = 1;
        if (from[pick] != -1) {
            int a = nodes[from[pick]], b = nodes[pick];
            Rat w = inst.d(a, b);
            mst.adj[a].push_back({b, w});
            mst.adj[b].push_back({a, w});
            mst.weight += w;
        }
        for (size_t i = 0; i < nodes.size(); ++i) {
            if (used[i]) continue;
            Rat d = inst.d(nodes[pick], nodes[i]);
            if (d < key[i]) {
                key[i] = d;
                from[i] = pick;
            }
        }
    }
    for (auto& [v, nb] : mst.adj) std::sort(nb.begin(), nb.end());
    return mst;
}

std::vector<int> mst_path(const Mst& mst, int u, int v) {
    std::map<int, int> parent;
    parent[u] = -1;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (const auto& [y, w] : mst.adj.at(x)) {
            (void)w;
            if (!parent.count(y)) {
                parent[y] = x;
                q.push(y);
            }
        }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent.at(x)) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

Rat mst_path_length(const Mst& mst, int u, int v) {
    std::vector<int> path = mst_path(mst, u, v);
    Rat len(0);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        for (const auto& [y, w] : mst.adj.at(path[i]))
            if (y == path[i + 1]) {
                len += w;
                break;
            }
    }
    return len;
}

void euler_subtree(const Mst& mst, int node, int parent, Rat& offset,
                   std::vector<std::pair<int, Rat>>& touches) {
    for (const auto& [nbr, w] : mst.adj.at(node)) {
        if (nbr == parent) continue;
        offset += w;
        touches.push_back({nbr, offset});
        euler_subtree(mst, nbr, node, offset, touches);
        offset += w;
        touches.push_back({node, offset});
    }
}

// Full touch sequence of the doubling walk u -> v: every edge off the
// direct path twice, the path itself once. Detours fire in ascending
// neighbor order before continuing along the path.
std::vector<std::pair<int, Rat>> mst_walk(const Mst& mst, int u, int v, Rat& length_out) {
    std::vector<int> path = mst_path(mst, u, v);
    std::map<int, char> on_path;
    for (int x : path) on_path[x] = 1;

    std::vector<std::pair<int, Rat>> touches;
    Rat offset(0);
    touches.push_back({u, offset});
    for (size_t i = 0; i < path.size(); ++i) {
        int x = path[i];
        for (const auto& [nbr, w] : mst.adj.at(x)) {
            if (on_path.count(nbr)) continue;
            offset += w;
            touches.push_back({nbr, offset});
            euler_subtree(mst, nbr, x, offset, touches);
            offset += w;
            touches.push_back({x, offset});
        }
        if (i + 1 < path.size()) {
            for (const auto& [nbr, w] : mst.adj.at(x))
                if (nbr == path[i + 1]) {
                    offset += w;
                    break;
                }
            touches.push_back({path[i + 1], offset});
        }
    }
    length_out = offset;
    return touches;
}

}  // namespace

Rat single_period_tree_length(const Instance& tree, const std::vector<int>& request_nodes,
                              int u, int v) {
    if (tree.kind != MetricKind::tree) throw std::invalid_argument("tree instance required");
    if (u < 0 || u >= tree.nodes || v < 0 || v >= tree.nodes)
        throw std::invalid_argument("node out of range");
    std::vector<int> set = request_nodes;
    set.push_back(u);
    set.push_back(v);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (int x : set)
        if (x < 0 || x >= tree.nodes) throw std::invalid_argument("node out of range");
    Rat w = steiner_weight(tree, set);
    return w + w - tree.d(u, v);
}

SpeedTest test_speed(const Instance& tree, const TrimmedInstance& trimmed, const Rat& speed) {
    if (tree.kind != MetricKind::tree) throw std::invalid_argument("tree instance required");
    if (speed.is_negative()) throw std::invalid_argument("speed must be non-negative");

    SpeedTest out;
    std::vector<PeriodData> periods = prepare_periods(tree, trimmed);
    if (periods.empty()) {
        out.feasible = true;
        out.tour.covers_all = true;
        out.tour.run.speed = speed;
        return out;
    }

    size_t m = periods.size();
    // Earliest times: arrive[i][u] = ready to start period i's walk at u;
    // done[i][v] = all of period i serviced, standing at v.
    std::vector<std::vector<Rat>> arrive(m), done(m);
    std::vector<std::vector<int>> arrive_arg(m), done_arg(m);
    std::vector<Rat> steiner(m);
    for (size_t i = 0; i < m; ++i) {
        size_t k = periods[i].nodes.size();
        arrive[i].assign(k, Rat::infinity());
        done[i].assign(k, Rat::infinity());
        arrive_arg[i].assign(k, -1);
        done_arg[i].assign(k, -1);
        steiner[i] = steiner_weight(tree, periods[i].nodes);
    }

    for (size_t i = 0; i < m; ++i) {
        const PeriodData& pd = periods[i];
        if (i == 0) {
            for (size_t ui = 0; ui < pd.nodes.size(); ++ui) arrive[0][ui] = pd.group.begin;
        } else {
            const PeriodData& prev = periods[i - 1];
            for (size_t wi = 0; wi < pd.nodes.size(); ++wi) {
                for (size_t vi = 0; vi < prev.nodes.size(); ++vi) {
                    if (done[i - 1][vi].is_infinite()) continue;
                    Rat t = done[i - 1][vi] +
                            travel_time(tree.d(prev.nodes[vi], pd.nodes[wi]), speed);
                    t = max(t, pd.group.begin);
                    if (t < arrive[i][wi]) {
                        arrive[i][wi] = t;
                        arrive_arg[i][wi] = static_cast<int>(vi);
                    }
                }
                if (!(arrive[i][wi] < pd.group.end)) arrive[i][wi] = Rat::infinity();
            }
        }
        for (size_t vi = 0; vi < pd.nodes.size(); ++vi) {
            for (size_t ui = 0; ui < pd.nodes.size(); ++ui) {
                if (arrive[i][ui].is_infinite()) continue;
                Rat walk = steiner[i] + steiner[i] - tree.d(pd.nodes[ui], pd.nodes[vi]);
                Rat t = arrive[i][ui] + travel_time(walk, speed);
                if (t < done[i][vi]) {
                    done[i][vi] = t;
                    done_arg[i][vi] = static_cast<int>(ui);
                }
            }
            if (!(done[i][vi] < pd.group.end)) done[i][vi] = Rat::infinity();
        }
    }

    int pick = -1;
    for (size_t vi = 0; vi < periods[m - 1].nodes.size(); ++vi) {
        if (done[m - 1][vi].is_infinite()) continue;
        if (pick == -1 || done[m - 1][vi] < done[m - 1][pick]) pick = static_cast<int>(vi);
    }
    if (pick == -1) return out;

    // Chosen endpoints per period, walked back to front.
    std::vector<std::pair<int, int>> ends(m);  // indices into periods[i].nodes
    int vi = pick;
    for (size_t i = m; i-- > 0;) {
        int ui = done_arg[i][vi];
        ends[i] = {ui, vi};
        if (i > 0) vi = arrive_arg[i][ui];
    }

    out.feasible = true;
    out.tour.covers_all = true;
    out.tour.run.speed = speed;
    for (size_t i = 0; i < m; ++i) {
        const PeriodData& pd = periods[i];
        int u = pd.nodes[ends[i].first], v = pd.nodes[ends[i].second];
        std::vector<long long> wts(tree.nodes, 0);
        for (int nd : pd.nodes) wts[nd] = 1;
        TreePathProfiler prof(tree, wts, u, v);
        WalkPlan plan = prof.plan(prof.profile().max_profit());
        emit_period_events(pd, plan.visits, arrive[i][ends[i].first], speed,
                           out.tour.run.events);
    }
    return out;
}

DeliveryResult delivery_graph(const Instance& inst, const TrimmedInstance& trimmed) {
    DeliveryResult out;
    std::vector<PeriodData> periods = prepare_periods(inst, trimmed);
    out.tour.covers_all = true;
    if (periods.empty()) {
        out.speed = Rat(0);
        out.tour.run.speed = Rat(0);
        return out;
    }

    size_t m = periods.size();
    std::vector<Mst> msts;
    msts.reserve(m);
    for (const auto& pd : periods) msts.push_back(build_mst(inst, pd.nodes));

    // Entry/exit nodes: adjacent periods join at their closest node pair;
    // the free ends stretch as far across their tree as possible.
    std::vector<int> entry(m, -1), exit_(m, -1);
    std::vector<Rat> conn(m, Rat(0));
    for (size_t i = 0; i + 1 < m; ++i) {
        Rat best;
        bool have = false;
        for (int x : periods[i].nodes) {
            for (int y : periods[i + 1].nodes) {
                Rat d = inst.d(x, y);
                if (!have || d < best) {
                    have = true;
                    best = d;
                    exit_[i] = x;
                    entry[i + 1] = y;
                }
            }
        }
        conn[i] = best;
    }
    if (m == 1) {
        Rat best(-1);
        for (int x : periods[0].nodes) {
            for (int y : periods[0].nodes) {
                Rat d = mst_path_length(msts[0], x, y);
                if (best < d) {
                    best = d;
                    entry[0] = x;
                    exit_[0] = y;
                }
            }
        }
    } else {
        {
            Rat best(-1);
            for (int x : periods[0].nodes) {
                Rat d = mst_path_length(msts[0], x, exit_[0]);
                if (best < d) {
                    best = d;
                    entry[0] = x;
                }
            }
        }
        {
            Rat best(-1);
            for (int y : periods[m - 1].nodes) {
                Rat d = mst_path_length(msts[m - 1], entry[m - 1], y);
                if (best < d) {
                    best = d;
                    exit_[m - 1] = y;
                }
            }
        }
    }

    std::vector<Rat> walk_len(m);
    std::vector<std::vector<std::pair<int, Rat>>> touches(m);
    for (size_t i = 0; i < m; ++i) touches[i] = mst_walk(msts[i], entry[i], exit_[i], walk_len[i]);

    // Closed-form infimum: every span from a period's start to a later
    // period's deadline must fit its along-tour distance.
    Rat speed(0);
    for (size_t i = 0; i < m; ++i) {
        Rat c(0);
        for (size_t j = i; j < m; ++j) {
            c += walk_len[j];
            Rat span = periods[j].group.end - periods[i].group.begin;
            Rat need = c / span;
            if (speed < need) speed = need;
            c += (j + 1 < m) ? conn[j] : Rat(0);
        }
    }
    out.speed = speed;

    Rat exec = speed.is_zero() ? speed : speed * (Rat(1) + Rat(1, 1LL << 50));
    out.tour.run.speed = exec;

    Rat at = periods[0].group.begin;
    for (size_t i = 0; i < m; ++i) {
        emit_period_events(periods[i], touches[i], at, exec, out.tour.run.events);
        for (const auto& [nd, off] : touches[i])
            out.visit_order.push_back({nd, periods[i].group.begin, periods[i].group.end});
        if (i + 1 < m) {
            Rat depart = at + travel_time(walk_len[i], exec);
            at = max(depart + travel_time(conn[i], exec), periods[i + 1].group.begin);
        }
    }
    return out;
}

DeliveryResult delivery_tree(const Instance& tree, const TrimmedInstance& trimmed,
                             const Rat& epsilon) {
    if (!(Rat(0) < epsilon) || epsilon.is_infinite())
        throw std::invalid_argument("epsilon must be positive and finite");

    DeliveryResult out;
    std::vector<PeriodData> periods = prepare_periods(tree, trimmed);
    if (periods.empty()) {
        out.speed = Rat(0);
        out.tour.covers_all = true;
        out.tour.run.speed = Rat(0);
        return out;
    }

    Rat chain_speed = delivery_graph(tree, trimmed).speed;
    if (chain_speed.is_zero()) {
        SpeedTest st = test_speed(tree, trimmed, Rat(0));
        out.speed = Rat(0);
        out.tour = st.tour;
        return out;
    }

    Rat lo = chain_speed / Rat(2);
    SpeedTest lo_test = test_speed(tree, trimmed, lo);
    if (lo_test.feasible) {
        out.speed = lo;
        out.tour = lo_test.tour;
        return out;
    }

    Rat hi = chain_speed;
    SpeedTest hi_test = test_speed(tree, trimmed, hi);
    if (!hi_test.feasible) {
        // The chain speed itself is an unattained infimum; nudge above it.
        hi = chain_speed * (Rat(1) + Rat(1, 1LL << 50));
        hi_test = test_speed(tree, trimmed, hi);
        if (!hi_test.feasible) throw std::logic_error("chain speed bracket failed");
    }

    Rat eps_prime = epsilon / Rat(4);
    int iterations = 0;
    for (Rat acc = eps_prime; acc < Rat(1); acc += acc) ++iterations;

    for (int it = 0; it < iterations; ++it) {
        Rat mid = (lo + hi) / Rat(2);
        SpeedTest st = test_speed(tree, trimmed, mid);
        if (st.feasible) {
            hi = mid;
            hi_test = std::move(st);
        } else {
            lo = mid;
        }
    }

    out.speed = hi;
    out.tour = hi_test.tour;
    return out;
}

}  // namespace twr
