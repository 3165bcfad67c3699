#pragma once

#include <vector>

#include "twr/instance.hpp"
#include "twr/schedule.hpp"
#include "twr/trimming.hpp"

namespace twr {

// Length of the shortest walk from u to v that touches every node in
// `request_nodes`: twice the spanning subtree weight minus the direct
// distance. u and v may coincide.
Rat single_period_tree_length(const Instance& tree, const std::vector<int>& request_nodes,
                              int u, int v);

struct SpeedTest {
    bool feasible = false;
    Tour tour;  // filled when feasible; run.speed is the tested speed
};

// Exact feasibility of a given speed on a trimmed tree instance: per period
// a covering walk between two request nodes, direct travel between periods,
// earliest arrivals throughout.
SpeedTest test_speed(const Instance& tree, const TrimmedInstance& trimmed, const Rat& speed);

struct DeliveryResult {
    Rat speed;  // reported speed (an infimum; the tour may run a hair above)
    Tour tour;
    // The tour's waypoints in travel order, windowed by their periods.
    // fixed_order_min_speed over these reproduces `speed` for the chain
    // construction.
    std::vector<OrderItem> visit_order;
};

// Bisection between half and the full chain-tour speed, keeping the best
// tour that passes test_speed. Accuracy epsilon is split so the overall
// guarantee against the untrimmed optimum stays 4 + epsilon.
DeliveryResult delivery_tree(const Instance& tree, const TrimmedInstance& trimmed,
                             const Rat& epsilon);

// Per-period minimum spanning trees walked end to end, periods joined by
// their closest node pair. The reported speed is the exact closed form of
// the resulting visiting order.
DeliveryResult delivery_graph(const Instance& inst, const TrimmedInstance& trimmed);

}  // namespace twr
