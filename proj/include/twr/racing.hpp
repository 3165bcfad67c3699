#pragma once

#include <vector>

#include "twr/instance.hpp"
#include "twr/schedule.hpp"
#include "twr/trimming.hpp"

namespace twr {

// Window length regimes for the zigzag construction. `bounded` carries the
// ratio D of longest to shortest window, rounded up.
struct WindowClass {
    enum Kind { unit, one_to_two, bounded } kind = unit;
    int ratio = 1;

    static WindowClass make_unit() { return {unit, 1}; }
    static WindowClass make_one_to_two() { return {one_to_two, 2}; }
    static WindowClass make_bounded(int D) { return {bounded, D}; }
};

struct WitnessEvent {
    int request_id = 0;
    Rat time;
    Rat arc_pos;
};

// A schedule that shadows a fixed tour by zigzagging along it at a
// constant multiple of its speed, meeting every request inside its trimmed
// window. Positions are arc lengths along the tour's node sequence and may
// fall mid-edge.
struct RacingWitness {
    std::vector<int> tour_nodes;
    std::vector<Rat> arc_prefix;   // cumulative distance per tour node
    std::vector<Rat> node_times;   // service times of the base tour
    Rat base_speed;
    Rat factor;                    // 2D + 2
    std::vector<WitnessEvent> schedule;  // sorted by time
    WindowMap targets;             // the trimmed windows the schedule meets
};

// The base tour's arc position at time t: leaves each node right after its
// service event, then waits at the next node. Flat before the first event
// and after the last.
Rat base_position(const RacingWitness& w, const Rat& t);

// The zigzag's pullback: the base-tour time whose position the witness
// holds at time t >= 0. Piecewise linear with slopes +-factor; over each
// unit block [B, B+1) it runs forward half a block, back to B, and forward
// again, netting one unit.
Rat witness_sigma(const Rat& t, const Rat& factor);

inline Rat witness_position(const RacingWitness& w, const Rat& t) {
    return base_position(w, witness_sigma(t, w.factor));
}

RacingWitness racing_tour(const Instance& inst, const std::vector<Request>& requests,
                          const Tour& base, WindowClass cls);

}  // namespace twr
