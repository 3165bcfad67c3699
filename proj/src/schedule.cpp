#include "twr/schedule.hpp"

#include <stdexcept>
#include <unordered_map>

namespace twr {

const char* violation_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::window_miss: return "window_miss";
        case ViolationKind::travel_too_fast: return "travel_too_fast";
        case ViolationKind::order_violation: return "order_violation";
        case ViolationKind::missing_request: return "missing_request";
    }
    return "?";
}

Rat travel_time(const Rat& d, const Rat& speed) {
    if (d.is_zero()) return Rat(0);
    if (speed.is_zero()) return Rat::infinity();
    return d / speed;
}

VerifyReport verify_run(const Instance& inst, const std::vector<Request>& requests,
                        const Run& run, const WindowMap* trimmed, bool require_all) {
    std::unordered_map<int, const Request*> by_id;
    for (const Request& r : requests) by_id[r.id] = &r;

    VerifyReport rep;
    auto flag = [&](ViolationKind kind, int id, std::string detail) {
        rep.feasible = false;
        rep.violations.push_back({kind, id, std::move(detail)});
    };

    std::unordered_map<int, int> seen;
    const Request* prev = nullptr;
    Rat prev_time;
    for (const ServiceEvent& ev : run.events) {
        auto it = by_id.find(ev.request_id);
        if (it == by_id.end())
            throw std::invalid_argument("verify_run: unknown request id " +
                                        std::to_string(ev.request_id));
        const Request& req = *it->second;

        if (seen[ev.request_id]++)
            flag(ViolationKind::order_violation, ev.request_id, "request serviced twice");

        bool in_window;
        std::string window_text;
        if (trimmed) {
            auto tw = trimmed->find(ev.request_id);
            if (tw == trimmed->end()) {
                in_window = false;
                window_text = "excluded by trimming";
            } else {
                in_window = tw->second.contains(ev.time);
                window_text = "[" + tw->second.start.to_string() + ", " +
                              tw->second.end.to_string() + ")";
            }
        } else {
            in_window = req.window_contains(ev.time);
            window_text =
                "[" + req.start.to_string() + ", " + req.window_end().to_string() + ")";
        }
        if (!in_window)
            flag(ViolationKind::window_miss, ev.request_id,
                 "serviced at " + ev.time.to_string() + ", window " + window_text);

        if (prev) {
            if (ev.time < prev_time) {
                flag(ViolationKind::order_violation, ev.request_id,
                     "service times decrease at " + ev.time.to_string());
            } else {
                Rat need = travel_time(inst.d(prev->node, req.node), run.speed);
                if (ev.time - prev_time < need)
                    flag(ViolationKind::travel_too_fast, ev.request_id,
                         "needs " + need.to_string() + " time units, has " +
                             (ev.time - prev_time).to_string());
            }
        }
        prev = &req;
        prev_time = ev.time;
    }

    if (require_all) {
        for (const Request& r : requests)
            if (!seen.count(r.id))
                flag(ViolationKind::missing_request, r.id, "never serviced");
    }
    return rep;
}

Rat fixed_order_min_speed(const Instance& inst, const std::vector<OrderItem>& order) {
    size_t n = order.size();
    Rat best(0);
    for (size_t k = 0; k < n; ++k) {
        Rat cum(0);
        for (size_t l = k; l < n; ++l) {
            if (l > k) cum += inst.d(order[l - 1].node, order[l].node);
            Rat slack = order[l].deadline - order[k].release;
            if (!(Rat(0) < slack)) return Rat::infinity();
            Rat need = cum / slack;
            if (best < need) best = need;
        }
    }
    return best;
}

std::optional<std::vector<Rat>> simulate_order(const Instance& inst,
                                               const std::vector<OrderItem>& order,
                                               const Rat& speed) {
    std::vector<Rat> times;
    times.reserve(order.size());
    Rat now;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i == 0) {
            now = order[0].release;
        } else {
            Rat t = travel_time(inst.d(order[i - 1].node, order[i].node), speed);
            if (t.is_infinite()) return std::nullopt;
            now += t;
            now = twr::max(now, order[i].release);
        }
        if (!(now < order[i].deadline)) return std::nullopt;
        times.push_back(now);
    }
    return times;
}

std::vector<OrderItem> order_from_requests(const std::vector<Request>& requests,
                                           const std::vector<int>& ids,
                                           const WindowMap* trimmed) {
    std::unordered_map<int, const Request*> by_id;
    for (const Request& r : requests) by_id[r.id] = &r;
    std::vector<OrderItem> order;
    order.reserve(ids.size());
    for (int id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end())
            throw std::invalid_argument("order_from_requests: unknown request id " +
                                        std::to_string(id));
        const Request& r = *it->second;
        OrderItem item;
        item.node = r.node;
        if (trimmed) {
            auto tw = trimmed->find(id);
            if (tw == trimmed->end())
                throw std::invalid_argument("order_from_requests: request " +
                                            std::to_string(id) + " excluded by trimming");
            item.release = tw->second.start;
            item.deadline = tw->second.end;
        } else {
            item.release = r.start;
            item.deadline = r.window_end();
        }
        order.push_back(item);
    }
    return order;
}

long long run_profit(const std::vector<Request>& requests, const Run& run) {
    std::unordered_map<int, long long> by_id;
    for (const Request& r : requests) by_id[r.id] = r.profit;
    long long total = 0;
    for (const ServiceEvent& ev : run.events) {
        auto it = by_id.find(ev.request_id);
        if (it == by_id.end())
            throw std::invalid_argument("run_profit: unknown request id " +
                                        std::to_string(ev.request_id));
        total += it->second;
    }
    return total;
}

}  // namespace twr
