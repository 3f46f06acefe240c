#pragma once

#include <span>
#include <vector>

#include "bots/aggregation.hpp"

namespace bots {

/// Normalizers of the applicability score. Day-wise scoring uses the
/// weekday's instance count and one day of minutes; the whole-week view
/// counts every instance and a full week, with each time-of-day rule
/// recurring on all seven days.
struct ScoringFrame {
    std::int64_t s_max = 0;
    int c_max = kMinutesPerDay;
    int coverage_repeat = 1;

    static ScoringFrame day_wise(const DayDataset& day) { return {day.total_count(), kMinutesPerDay, 1}; }
    static ScoringFrame whole_week(std::int64_t log_size) { return {log_size, kMinutesPerWeek, 7}; }
};

struct ApplicabilityTerm {
    Interval interval;
    std::int64_t support = 0;
    int coverage_minutes = 0;
    double value = 0.0;
};

struct ApplicabilityReport {
    BasePeriod base_period{1};
    double applicability = 0.0;
    std::vector<ApplicabilityTerm> terms;
    std::int64_t s_max = 0;
    int c_max = kMinutesPerDay;
};

/// Sum over rules of (Rsup / s_max) * (Rcov / c_max). An empty dataset
/// (s_max == 0) scores zero.
double applicability(std::span<const Segment> filtered, std::int64_t s_max, int c_max);

ApplicabilityReport score(std::span<const Segment> filtered, BasePeriod bp, const ScoringFrame& frame);

struct SweepPoint {
    BasePeriod base_period{1};
    double applicability = 0.0;
};

struct OptimalResult {
    Weekday weekday = Weekday::Monday;
    BasePeriod optimal_base_period{1};
    Segmentation segmentation;
    ApplicabilityReport report;
    std::vector<SweepPoint> sweep;

    std::vector<Segment> filtered() const { return filter_segments(segmentation); }
};

/// Scores closer than this are treated as equal and the smaller base period wins.
inline constexpr double kScoreTieTolerance = 1e-12;

/// start, start+step, ... up to and including max when reached.
std::vector<BasePeriod> make_grid(int start, int step, int max);
/// 5, 10, ..., 240 minutes.
std::vector<BasePeriod> default_grid();

/// Runs slice -> aggregate -> filter -> score for every base period of the
/// grid and keeps the highest-scoring one.
OptimalResult find_optimal(const DayDataset& day, ConfidenceThreshold t,
                           std::span<const BasePeriod> grid);
OptimalResult find_optimal(const DayDataset& day, ConfidenceThreshold t,
                           std::span<const BasePeriod> grid, const ScoringFrame& frame);

}  // namespace bots
