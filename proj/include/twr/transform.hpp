#pragma once

#include <vector>

#include "twr/instance.hpp"

namespace twr {

enum class ServiceTimeModel {
    contained,   // the whole service interval must fit inside the window
    start_only,  // service must start inside the window, may overrun it
};

// Folds per-event service durations into the graph: each affected request
// moves to a fresh pendant node half the service time away, with its window
// narrowed (contained) or shifted (start_only) to compensate. Requests with
// zero duration stay untouched.
std::pair<Instance, std::vector<Request>> service_time_transform(
    const Instance& inst, const std::vector<Request>& requests, ServiceTimeModel model,
    const std::vector<Rat>& durations);

std::pair<Instance, std::vector<Request>> service_time_transform(
    const Instance& inst, const std::vector<Request>& requests, ServiceTimeModel model,
    const Rat& uniform_duration);

}  // namespace twr
