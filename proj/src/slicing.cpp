#include "bots/slicing.hpp"

#include <algorithm>

namespace bots {

BasePeriod::BasePeriod(int minutes) : minutes_(minutes) {
    if (minutes < 1 || minutes > kMinutesPerDay) {
        throw Error("base period must be within [1, 1440] minutes, got " + std::to_string(minutes));
    }
}

std::vector<Interval> generate_slice_boundaries(BasePeriod bp) {
    std::vector<Interval> out;
    out.reserve((kMinutesPerDay + bp.minutes() - 1) / bp.minutes());
    for (int start = 0; start < kMinutesPerDay; start += bp.minutes()) {
        out.push_back({start, std::min(start + bp.minutes(), kMinutesPerDay)});
    }
    return out;
}

void check_day_partition(std::span<const Interval> boundaries) {
    int expected = 0;
    for (const auto& b : boundaries) {
        if (b.start != expected || b.end <= b.start) {
            throw Error("slice boundaries must be consecutive and non-empty, broken at " +
                        format_interval(b));
        }
        expected = b.end;
    }
    if (expected != kMinutesPerDay) {
        throw Error("slice boundaries must cover the whole day");
    }
}

std::vector<TimeSlice> populate_slices(const DayDataset& day, std::span<const Interval> boundaries) {
    check_day_partition(boundaries);
    std::vector<TimeSlice> slices;
    slices.reserve(boundaries.size());
    for (const auto& b : boundaries) {
        slices.push_back({b, {}});
    }
    for (const auto& inst : day.instances) {
        if (inst.minute < 0 || inst.minute >= kMinutesPerDay) {
            throw Error("minute of day out of range: " + std::to_string(inst.minute));
        }
        // first slice whose end lies beyond the minute
        auto it = std::upper_bound(boundaries.begin(), boundaries.end(), inst.minute,
                                   [](int m, const Interval& b) { return m < b.end; });
        slices[static_cast<std::size_t>(it - boundaries.begin())].counts.add(inst.label);
    }
    return slices;
}

}  // namespace bots
