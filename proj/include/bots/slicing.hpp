#pragma once

#include <span>
#include <vector>

#include "bots/core.hpp"
#include "bots/ingest.hpp"

namespace bots {

/// Length in minutes of one initial time slice, 1..1440.
class BasePeriod {
public:
    explicit BasePeriod(int minutes);

    int minutes() const { return minutes_; }
    auto operator<=>(const BasePeriod&) const = default;

private:
    int minutes_;
};

struct TimeSlice {
    Interval interval;
    LabelCounts counts;

    std::int64_t support() const { return counts.total(); }
};

/// ceil(1440 / bp) consecutive slices; the last one is shorter when bp does
/// not divide the day.
std::vector<Interval> generate_slice_boundaries(BasePeriod bp);

/// Throws unless `boundaries` are consecutive, non-empty and cover [0, 1440).
void check_day_partition(std::span<const Interval> boundaries);

/// Counts each instance into the slice that contains its minute.
std::vector<TimeSlice> populate_slices(const DayDataset& day, std::span<const Interval> boundaries);

}  // namespace bots
