#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "twr/instance.hpp"
#include "twr/schedule.hpp"

namespace twr {

struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_no, const std::string& msg);
};

struct InstanceFile {
    Instance inst;
    std::vector<Request> requests;
};

// One directive per line, '#' starts a comment. The file opens with
// "twr 1" and "metric tree|graph"; then "node <id>" (dense ids, in order),
// "edge <u> <v> <weight>", "request <id> <node> <start> <length> [<profit>]".
InstanceFile parse_instance(const std::string& text);
std::string format_instance(const Instance& inst, const std::vector<Request>& requests);

enum class SolutionKind { repairman, deliveryman };

// "solution repairman|deliveryman", an optional "speed <s>" line
// (deliveryman only, required there), then "event <request-id> <time>"
// lines in service order.
struct SolutionFile {
    SolutionKind kind = SolutionKind::repairman;
    Run run;
};

SolutionFile parse_solution(const std::string& text);
std::string format_solution(const SolutionFile& sol);

struct RandomParams {
    int nodes = 8;
    MetricKind kind = MetricKind::tree;
    int requests = 6;
    Rat min_length = Rat(1);
    Rat max_length = Rat(1);
    int horizon = 4;
};

// Deterministic per seed; weights use small numerators over power-of-two
// denominators, starts sit on the quarter grid, lengths on the eighth grid.
InstanceFile generate_random(unsigned long long seed, const RandomParams& params);

// The hardness gadget: a star with center u, one leaf per multiset value
// at that cost, far leaves s and t at cost 6K, and a midpoint leaf v at
// cost K, where 2K is the multiset sum. All windows are 6K long; a run
// serving every request exists exactly when the multiset splits into two
// halves of equal sum.
InstanceFile generate_partition(const std::vector<long long>& values);

}  // namespace twr
