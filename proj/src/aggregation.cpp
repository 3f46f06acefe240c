#include "bots/aggregation.hpp"

namespace bots {

std::vector<Segment> aggregate(std::span<const TimeSlice> slices, ConfidenceThreshold t) {
    if (slices.empty()) {
        throw Error("cannot aggregate an empty slice grid");
    }
    std::vector<Interval> grid;
    grid.reserve(slices.size());
    for (const auto& s : slices) {
        grid.push_back(s.interval);
    }
    check_day_partition(grid);

    std::vector<Segment> segments;
    // Merge key of each segment: the slice-level dominant label it was built from.
    std::vector<std::optional<BehaviorLabel>> keys;
    for (const auto& slice : slices) {
        auto key = identify_dominant(slice.counts, t).dominant;
        if (!segments.empty() && key == keys.back()) {
            Segment& open = segments.back();
            open.interval.end = slice.interval.end;
            open.counts.merge(slice.counts);
        } else {
            segments.push_back({slice.interval, slice.counts, {}});
            keys.push_back(std::move(key));
        }
    }

    // The merged share of a label is a support-weighted mean of the slice
    // shares, so recomputation must reproduce the merge key.
    for (std::size_t i = 0; i < segments.size(); ++i) {
        segments[i].dominance = identify_dominant(segments[i].counts, t);
        if (segments[i].dominance.dominant != keys[i]) {
            throw std::logic_error("merged segment " + format_interval(segments[i].interval) +
                                   " changed dominant label");
        }
    }
    return segments;
}

Segmentation aggregate(std::span<const TimeSlice> slices, Weekday weekday, BasePeriod bp,
                       ConfidenceThreshold t) {
    return {weekday, bp, t, aggregate(slices, t)};
}

std::vector<Segment> filter_segments(std::span<const Segment> segments) {
    std::vector<Segment> out;
    for (const auto& seg : segments) {
        if (seg.has_dominant()) {
            out.push_back(seg);
        }
    }
    return out;
}

std::vector<Segment> filter_segments(const Segmentation& seg) { return filter_segments(seg.segments); }

}  // namespace bots
