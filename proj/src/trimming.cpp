#include "twr/trimming.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twr {

FactorialDigits::FactorialDigits(std::vector<int> digits) : digits_(std::move(digits)) {
    for (size_t j = 0; j < digits_.size(); ++j) {
        int bound = static_cast<int>(j) + 1;
        if (digits_[j] < 0 || digits_[j] > bound)
            throw std::invalid_argument("FactorialDigits: digit d_" + std::to_string(j + 1) +
                                        " out of range");
    }
}

int FactorialDigits::digit(int i) const {
    if (i <= 0 || i > width()) return 0;
    return digits_[i - 1];
}

FactorialDigits factorial_encode(long long k, int width) {
    if (k < 0) throw std::invalid_argument("factorial_encode: negative value");
    std::vector<int> digits(width);
    long long rest = k;
    for (int i = 1; i <= width; ++i) {
        digits[i - 1] = static_cast<int>(rest % (i + 1));
        rest /= i + 1;
    }
    if (rest != 0)
        throw std::invalid_argument("factorial_encode: value does not fit in " +
                                    std::to_string(width) + " digits");
    return FactorialDigits(std::move(digits));
}

long long factorial_decode(const FactorialDigits& digits) {
    long long value = 0;
    long long fact = 1;
    for (int i = 1; i <= digits.width(); ++i) {
        fact *= i;
        value += fact * digits.digit(i);
    }
    return value;
}

const TrimEntry* TrimmedInstance::entry_for(int request_id) const {
    for (size_t i = 0; i < requests.size(); ++i)
        if (requests[i].id == request_id) return &entries[i];
    return nullptr;
}

WindowMap TrimmedInstance::window_map() const {
    WindowMap map;
    for (size_t i = 0; i < requests.size(); ++i)
        if (!entries[i].excluded) map[requests[i].id] = entries[i].target;
    return map;
}

std::vector<Request> TrimmedInstance::included_requests() const {
    std::vector<Request> out;
    for (size_t i = 0; i < requests.size(); ++i)
        if (!entries[i].excluded) out.push_back(requests[i]);
    return out;
}

std::vector<PeriodGroup> TrimmedInstance::occupied_periods() const {
    std::map<long long, std::vector<int>> buckets;
    for (size_t i = 0; i < requests.size(); ++i)
        if (!entries[i].excluded) buckets[entries[i].period].push_back(requests[i].id);
    std::vector<PeriodGroup> out;
    out.reserve(buckets.size());
    for (auto& [period, ids] : buckets)
        out.push_back({period, grid.begin(period), grid.end(period), std::move(ids)});
    return out;
}

TrimmedInstance trim_general(const std::vector<Request>& requests, const PeriodGrid& grid,
                             const FactorialDigits& choice) {
    if (!(Rat(0) < grid.length))
        throw std::invalid_argument("trim_general: period length must be positive");

    TrimmedInstance out;
    out.grid = grid;
    out.requests = requests;
    out.entries.reserve(requests.size());
    for (const Request& r : requests) {
        // Periods wholly inside [start, end): indices from ceil((start-o)/L)
        // through floor((end-o)/L) - 1.
        long long lo = ((r.start - grid.offset) / grid.length).ceil().floor_ll();
        long long hi = ((r.window_end() - grid.offset) / grid.length).floor_ll() - 1;
        long long v = hi - lo + 1;
        TrimEntry entry;
        if (v <= 0) {
            entry.excluded = true;
        } else {
            int d = choice.digit(static_cast<int>(v - 1));
            if (d > v - 1)
                throw std::logic_error("trim_general: trim digit exceeds contained periods");
            entry.period = lo + d;
            entry.target = grid.period(entry.period);
        }
        out.entries.push_back(entry);
    }
    return out;
}

TrimmedInstance trim_unit(const std::vector<Request>& requests) {
    for (const Request& r : requests)
        if (r.length != Rat(1))
            throw std::invalid_argument("trim_unit: request " + std::to_string(r.id) +
                                        " does not have a unit window");
    return trim_general(requests, PeriodGrid{Rat(1, 2), Rat(0)}, FactorialDigits());
}

TrimmedInstance trim_earliest_half(const std::vector<Request>& requests) {
    for (const Request& r : requests)
        if (r.length < Rat(1))
            throw std::invalid_argument("trim_earliest_half: request " + std::to_string(r.id) +
                                        " has window shorter than 1");
    return trim_general(requests, PeriodGrid{Rat(1, 2), Rat(0)}, FactorialDigits());
}

std::array<Run, 3> limited_loss_candidates(const Run& run, const TrimmedInstance& trimmed) {
    const Rat shifts[3] = {Rat(0), Rat(1, 2), Rat(-1, 2)};
    std::array<Run, 3> out;
    for (int c = 0; c < 3; ++c) {
        out[c].speed = run.speed;
        for (const ServiceEvent& ev : run.events) {
            const TrimEntry* entry = trimmed.entry_for(ev.request_id);
            if (!entry || entry->excluded) continue;
            Rat t = ev.time + shifts[c];
            if (entry->target.contains(t)) out[c].events.push_back({ev.request_id, t});
        }
    }
    return out;
}

}  // namespace twr
