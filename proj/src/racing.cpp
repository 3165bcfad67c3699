#include "twr/racing.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace twr {

Rat base_position(const RacingWitness& w, const Rat& t) {
    if (w.node_times.empty()) return Rat(0);
    if (t <= w.node_times.front()) return Rat(0);
    if (t >= w.node_times.back()) return w.arc_prefix.back();
    size_t i = 0;
    while (i + 1 < w.node_times.size() && w.node_times[i + 1] <= t) ++i;
    // Moving leg out of node i, capped at node i+1's position.
    Rat moved = w.arc_prefix[i] + w.base_speed * (t - w.node_times[i]);
    return twr::min(moved, w.arc_prefix[i + 1]);
}

Rat witness_sigma(const Rat& t, const Rat& factor) {
    if (t.is_negative()) throw std::invalid_argument("witness_sigma: negative time");
    Rat block = t.floor();
    Rat r = t - block;
    Rat half(1, 2);
    if (r <= half) return block - half + factor * r;
    Rat crest = block - half + factor * half;
    Rat back_end = Rat(1) - Rat(1) / (Rat(2) * factor);
    if (r <= back_end) return crest - factor * (r - half);
    return block + factor * (r - back_end);
}

namespace {

// Service time inside the target half-period [T, T+1/2) at which the
// witness's pullback equals the base service time tau. Even-start targets
// are met on the ascending leg, odd-start targets on the descending one.
Rat witness_service_time(const Rat& T, const Rat& tau, const Rat& factor, int D) {
    if (T.floor() == T) return T + (tau - T + Rat(1, 2)) / factor;
    return T + (T + Rat(D) - tau) / factor;
}

}  // namespace

RacingWitness racing_tour(const Instance& inst, const std::vector<Request>& requests,
                          const Tour& base, WindowClass cls) {
    for (const Request& r : requests) {
        bool ok = true;
        switch (cls.kind) {
            case WindowClass::unit: ok = r.length == Rat(1); break;
            case WindowClass::one_to_two: ok = Rat(1) <= r.length && r.length < Rat(2); break;
            case WindowClass::bounded:
                ok = Rat(1) <= r.length && r.length <= Rat(cls.ratio);
                break;
        }
        if (!ok)
            throw std::invalid_argument("racing_tour: request " + std::to_string(r.id) +
                                        " outside the declared window class");
        if (r.start.is_negative())
            throw std::invalid_argument("racing_tour: windows must start at time >= 0");
    }
    int D = cls.kind == WindowClass::bounded ? cls.ratio : (cls.kind == WindowClass::unit ? 1 : 2);
    if (D < 1) throw std::invalid_argument("racing_tour: window ratio must be >= 1");

    VerifyReport rep = verify_run(inst, requests, base.run, nullptr, true);
    if (!rep.feasible)
        throw std::invalid_argument("racing_tour: base tour infeasible at its declared speed");

    TrimmedInstance trimmed =
        cls.kind == WindowClass::unit ? trim_unit(requests) : trim_earliest_half(requests);

    std::unordered_map<int, const Request*> by_id;
    for (const Request& r : requests) by_id[r.id] = &r;

    RacingWitness w;
    w.base_speed = base.run.speed;
    w.factor = Rat(2 * D + 2);
    w.targets = trimmed.window_map();
    for (size_t i = 0; i < base.run.events.size(); ++i) {
        const ServiceEvent& ev = base.run.events[i];
        w.tour_nodes.push_back(by_id.at(ev.request_id)->node);
        w.node_times.push_back(ev.time);
        if (i == 0)
            w.arc_prefix.push_back(Rat(0));
        else
            w.arc_prefix.push_back(w.arc_prefix.back() +
                                   inst.d(w.tour_nodes[i - 1], w.tour_nodes[i]));
    }

    for (size_t i = 0; i < base.run.events.size(); ++i) {
        const ServiceEvent& ev = base.run.events[i];
        const TrimEntry* entry = trimmed.entry_for(ev.request_id);
        Rat u = witness_service_time(entry->target.start, ev.time, w.factor, D);
        w.schedule.push_back({ev.request_id, u, w.arc_prefix[i]});
    }
    std::sort(w.schedule.begin(), w.schedule.end(), [](const WitnessEvent& a, const WitnessEvent& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.request_id < b.request_id;
    });
    return w;
}

}  // namespace twr
