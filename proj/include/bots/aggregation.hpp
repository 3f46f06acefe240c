#pragma once

#include <span>
#include <vector>

#include "bots/dominance.hpp"
#include "bots/slicing.hpp"

namespace bots {

/// A maximal run of adjacent slices that share a dominant label (or share
/// having none). Dominance is always recomputed from the merged counts.
struct Segment {
    Interval interval;
    LabelCounts counts;
    DominanceResult dominance;

    std::int64_t support() const { return counts.total(); }
    bool has_dominant() const { return dominance.dominant.has_value(); }
};

struct Segmentation {
    Weekday weekday = Weekday::Monday;
    BasePeriod base_period{1};
    ConfidenceThreshold threshold{1.0};
    std::vector<Segment> segments;
};

/// Left-to-right sweep over a full-day slice grid: a slice whose dominant
/// label (None included) equals the open segment's extends it, anything
/// else closes it and opens a new one.
std::vector<Segment> aggregate(std::span<const TimeSlice> slices, ConfidenceThreshold t);

Segmentation aggregate(std::span<const TimeSlice> slices, Weekday weekday, BasePeriod bp,
                       ConfidenceThreshold t);

/// The dominant-bearing segments, in time order.
std::vector<Segment> filter_segments(std::span<const Segment> segments);
std::vector<Segment> filter_segments(const Segmentation& seg);

}  // namespace bots
