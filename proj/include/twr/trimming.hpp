#pragma once

#include <array>
#include <vector>

#include "twr/instance.hpp"
#include "twr/schedule.hpp"

namespace twr {

// A uniform partition of the time axis into half-open cells
// [offset + i*length, offset + (i+1)*length), indexed by integer i.
struct PeriodGrid {
    Rat length = Rat(1, 2);
    Rat offset = Rat(0);

    Rat begin(long long i) const { return offset + Rat(i) * length; }
    Rat end(long long i) const { return begin(i + 1); }
    Window period(long long i) const { return {begin(i), end(i)}; }
    long long index_of(const Rat& t) const { return ((t - offset) / length).floor_ll(); }
};

// Mixed-radix digits d_u...d_1 with d_i in {0..i} and place value i!.
// Digits beyond the stored width read as zero.
class FactorialDigits {
public:
    FactorialDigits() = default;
    explicit FactorialDigits(std::vector<int> digits);

    int width() const { return static_cast<int>(digits_.size()); }
    int digit(int i) const;

    const std::vector<int>& raw() const { return digits_; }
    bool operator==(const FactorialDigits& o) const { return digits_ == o.digits_; }

private:
    std::vector<int> digits_;  // digits_[j] = d_{j+1}
};

FactorialDigits factorial_encode(long long k, int width);
long long factorial_decode(const FactorialDigits& digits);

struct TrimEntry {
    bool excluded = false;
    long long period = 0;
    Window target;
};

struct PeriodGroup {
    long long period = 0;
    Rat begin;
    Rat end;
    std::vector<int> request_ids;
};

// The result of contracting each request window to one wholly contained
// grid period (or dropping it when none fits). Entries align with the
// stored request list by index.
struct TrimmedInstance {
    PeriodGrid grid;
    std::vector<Request> requests;
    std::vector<TrimEntry> entries;

    const TrimEntry* entry_for(int request_id) const;
    WindowMap window_map() const;
    std::vector<Request> included_requests() const;
    // Periods holding at least one request, in time order.
    std::vector<PeriodGroup> occupied_periods() const;
};

// Any window lengths; a request whose window wholly contains v > 0 grid
// periods is trimmed to its (1 + d_{v-1})-th one (d_0 = 0), and excluded
// when v = 0.
TrimmedInstance trim_general(const std::vector<Request>& requests, const PeriodGrid& grid,
                             const FactorialDigits& choice);

// Unit-length windows on the half-integer grid. Each window wholly
// contains exactly one half-period, except when the window start sits on a
// grid division, where the earlier of the two candidates wins.
TrimmedInstance trim_unit(const std::vector<Request>& requests);

// Windows of length >= 1 trimmed to the earliest wholly contained
// half-period; the deliveryman-side trimming rule.
TrimmedInstance trim_earliest_half(const std::vector<Request>& requests);

// The best-of-three recovery: the run filtered to events already inside
// their targets, and the run shifted by +1/2 and -1/2 keeping whatever
// lands inside a target. Each result is feasible on the trimmed windows,
// and the best one keeps at least a third of the profit.
std::array<Run, 3> limited_loss_candidates(const Run& run, const TrimmedInstance& trimmed);

}  // namespace twr
