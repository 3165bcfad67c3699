#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twr/instance.hpp"
#include "twr/rational.hpp"

namespace twr {

struct ServiceEvent {
    int request_id = 0;
    Rat time;
};

// A feasible timed sequence of service events at a fixed speed. The
// repairman always travels at speed 1; the deliveryman carries the speed
// his tour needs.
struct Run {
    std::vector<ServiceEvent> events;
    Rat speed = Rat(1);
};

// A run that is supposed to cover every request of the instance.
struct Tour {
    Run run;
    bool covers_all = false;
};

enum class ViolationKind { window_miss, travel_too_fast, order_violation, missing_request };

struct Violation {
    ViolationKind kind = ViolationKind::window_miss;
    int request_id = -1;
    std::string detail;
};

struct VerifyReport {
    bool feasible = true;
    std::vector<Violation> violations;
};

const char* violation_name(ViolationKind k);

// Window overrides by request id; requests absent from the map are treated
// as excluded (servicing them is a violation).
using WindowMap = std::map<int, Window>;

// d == 0 is free at any speed, even zero. Positive distance at zero speed
// is unreachable.
Rat travel_time(const Rat& d, const Rat& speed);

VerifyReport verify_run(const Instance& inst, const std::vector<Request>& requests,
                        const Run& run, const WindowMap* trimmed = nullptr,
                        bool require_all = false);

inline VerifyReport verify_tour(const Instance& inst, const std::vector<Request>& requests,
                                const Tour& tour, const WindowMap* trimmed = nullptr) {
    return verify_run(inst, requests, tour.run, trimmed, true);
}

// One stop of a fixed visiting order: be at `node` no earlier than
// `release` and strictly before `deadline`.
struct OrderItem {
    int node = 0;
    Rat release;
    Rat deadline;  // exclusive
};

// Infimum speed that admits a schedule visiting the items in order.
// Infinity when no speed works (some deadline is not after an earlier
// release). The infimum itself may be unattainable.
Rat fixed_order_min_speed(const Instance& inst, const std::vector<OrderItem>& order);

// Earliest-service greedy with waiting; the optimal schedule for a fixed
// order at a fixed speed. Returns service times, or nothing if infeasible.
std::optional<std::vector<Rat>> simulate_order(const Instance& inst,
                                               const std::vector<OrderItem>& order,
                                               const Rat& speed);

std::vector<OrderItem> order_from_requests(const std::vector<Request>& requests,
                                           const std::vector<int>& ids,
                                           const WindowMap* trimmed = nullptr);

// Total profit of the requests a run services.
long long run_profit(const std::vector<Request>& requests, const Run& run);

}  // namespace twr
