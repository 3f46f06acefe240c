#include "bots/optimizer.hpp"

namespace bots {

double applicability(std::span<const Segment> filtered, std::int64_t s_max, int c_max) {
    if (c_max <= 0) {
        throw Error("maximum temporal coverage must be positive");
    }
    if (s_max <= 0) {
        return 0.0;
    }
    double total = 0.0;
    for (const auto& seg : filtered) {
        total += (static_cast<double>(seg.support()) / static_cast<double>(s_max)) *
                 (static_cast<double>(seg.interval.length()) / static_cast<double>(c_max));
    }
    return total;
}

ApplicabilityReport score(std::span<const Segment> filtered, BasePeriod bp, const ScoringFrame& frame) {
    if (frame.c_max <= 0 || frame.coverage_repeat <= 0) {
        throw Error("invalid scoring frame");
    }
    ApplicabilityReport report{bp, 0.0, {}, frame.s_max, frame.c_max};
    report.terms.reserve(filtered.size());
    for (const auto& seg : filtered) {
        ApplicabilityTerm term{seg.interval, seg.support(),
                               seg.interval.length() * frame.coverage_repeat, 0.0};
        if (frame.s_max > 0) {
            term.value = (static_cast<double>(term.support) / static_cast<double>(frame.s_max)) *
                         (static_cast<double>(term.coverage_minutes) / static_cast<double>(frame.c_max));
        }
        report.applicability += term.value;
        report.terms.push_back(term);
    }
    return report;
}

std::vector<BasePeriod> make_grid(int start, int step, int max) {
    if (start < 1 || step < 1 || max > kMinutesPerDay || max < start) {
        throw Error("invalid base period grid: start " + std::to_string(start) + ", step " +
                    std::to_string(step) + ", max " + std::to_string(max));
    }
    std::vector<BasePeriod> grid;
    for (int bp = start; bp <= max; bp += step) {
        grid.emplace_back(bp);
    }
    return grid;
}

std::vector<BasePeriod> default_grid() { return make_grid(5, 5, 240); }

OptimalResult find_optimal(const DayDataset& day, ConfidenceThreshold t,
                           std::span<const BasePeriod> grid) {
    return find_optimal(day, t, grid, ScoringFrame::day_wise(day));
}

OptimalResult find_optimal(const DayDataset& day, ConfidenceThreshold t,
                           std::span<const BasePeriod> grid, const ScoringFrame& frame) {
    if (grid.empty()) {
        throw Error("base period grid must not be empty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
            throw Error("base period grid must be strictly increasing");
        }
    }

    std::optional<OptimalResult> best;
    std::vector<SweepPoint> sweep;
    sweep.reserve(grid.size());
    for (BasePeriod bp : grid) {
        auto slices = populate_slices(day, generate_slice_boundaries(bp));
        Segmentation seg = aggregate(slices, day.weekday, bp, t);
        auto report = score(filter_segments(seg), bp, frame);
        sweep.push_back({bp, report.applicability});
        if (!best || report.applicability > best->report.applicability + kScoreTieTolerance) {
            best = OptimalResult{day.weekday, bp, std::move(seg), std::move(report), {}};
        }
    }
    best->sweep = std::move(sweep);
    return std::move(*best);
}

}  // namespace bots
