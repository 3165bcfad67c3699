#pragma once

#include <stdexcept>
#include <vector>

#include "twr/instance.hpp"
#include "twr/profile.hpp"
#include "twr/schedule.hpp"

namespace twr {

// Hard caps for the exhaustive reference solvers. They are meant for desk
// sizes; anything bigger should go through the real algorithms.
struct OracleBudget {
    int max_requests = 8;
    int max_nodes = 10;
    double time_limit_seconds = 60.0;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RepairmanOracleResult {
    long long profit = 0;
    Run run;
};

struct DeliverymanOracleResult {
    Rat speed;               // infimum over all service orders
    std::vector<int> order;  // request ids in the best order found
};

// Exhaustive search over service orders with earliest-service timing.
// With `trimmed` set, windows come from the map and excluded requests are
// unavailable. Prunes symmetric twins and hopeless branches, and stops
// early once every serviceable request is covered.
RepairmanOracleResult brute_repairman(const Instance& inst, const std::vector<Request>& requests,
                                      const WindowMap* trimmed = nullptr,
                                      const OracleBudget& budget = {});

// Minimum feasible speed over all permutations of the full request set.
// Returns infinity when no order works (or trimming dropped a request).
DeliverymanOracleResult brute_deliveryman(const Instance& inst,
                                          const std::vector<Request>& requests,
                                          const WindowMap* trimmed = nullptr,
                                          const OracleBudget& budget = {});

// Reference walk profile: enumerates every s-to-t node sequence over the
// positively weighted nodes and records, per profit level, the cheapest
// total distance reaching at least that profit.
ProfitCostProfile brute_path_profile(const Instance& inst, const std::vector<long long>& weight,
                                     int s, int t, const OracleBudget& budget = {});

}  // namespace twr
