#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bots/pipeline.hpp"

namespace bots {

/// Point lookup over a validated (non-overlapping) rule set.
class RulePredictor {
public:
    explicit RulePredictor(std::span<const TemporalRule> rules);

    const TemporalRule* find(Weekday day, int minute) const;
    std::optional<BehaviorLabel> predict(Weekday day, int minute) const;

private:
    std::array<std::vector<TemporalRule>, 7> by_day_;
};

std::optional<BehaviorLabel> predict(std::span<const TemporalRule> rules, Weekday day, int minute);

struct CoverageAccuracy {
    std::int64_t dataset_size = 0;
    std::int64_t n_covers = 0;
    std::int64_t n_correct = 0;
    double coverage_pct = 0.0;
    /// 0 with `accuracy_defined == false` when nothing is covered.
    double accuracy_pct = 0.0;
    bool accuracy_defined = false;
};

CoverageAccuracy coverage_accuracy(std::span<const TemporalRule> rules, std::span<const DayDataset> days);
/// Uses the dominant-bearing segments of `seg` against a single day.
CoverageAccuracy coverage_accuracy(const Segmentation& seg, const DayDataset& day);

struct ClassConfusion {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
};

struct PrecisionRecall {
    /// Macro averages over the classes present among the actual labels. A
    /// class with no predictions contributes precision 0 and raises the flag.
    double precision = 0.0;
    double recall = 0.0;
    bool precision_defined = true;
    std::map<BehaviorLabel, ClassConfusion> per_class;
};

using Prediction = std::pair<std::optional<BehaviorLabel>, BehaviorLabel>;

/// An uncovered instance (no prediction) is a false negative for its actual
/// class and a false positive for no class.
PrecisionRecall precision_recall(std::span<const Prediction> predictions);

struct FoldReport {
    std::size_t fold = 0;
    std::size_t train_size = 0;
    std::size_t test_size = 0;
    PrecisionRecall scores;
    CoverageAccuracy coverage;
};

struct CrossValidationReport {
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::vector<FoldReport> folds;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
    double mean_coverage_pct = 0.0;
    bool precision_defined = true;
};

/// Seeded shuffle into k near-equal folds; each fold is predicted by rules
/// mined from the other k-1.
CrossValidationReport cross_validate(std::span<const BehavioralTransaction> transactions,
                                     const MiningConfig& config, std::size_t k, std::uint64_t seed);

/// Fold index of every transaction, as used by cross_validate.
std::vector<std::size_t> assign_folds(std::size_t n, std::size_t k, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Static baseline segmentations

enum class BaselineId { BM1, BM2, BM3, BM4, BM5 };

inline constexpr std::array<BaselineId, 5> kAllBaselines = {BaselineId::BM1, BaselineId::BM2, BaselineId::BM3,
                                                            BaselineId::BM4, BaselineId::BM5};

std::string_view to_string(BaselineId id);
std::optional<BaselineId> parse_baseline(std::string_view text);

/// Fixed daily time slots. A slot may consist of several intervals (the
/// night slot wrapping midnight); the union of all slots partitions the day.
struct BaselineSpec {
    BaselineId id = BaselineId::BM1;
    std::vector<std::vector<Interval>> slots;

    /// All intervals in time order.
    std::vector<Interval> boundaries() const;
};

/// BM1 15-minute equal; BM2 morning/afternoon/evening/night 6-12-16-20;
/// BM3 7-11-14-18-21 with night wrapping; BM4 4-hour equal; BM5 3-hour equal.
BaselineSpec baseline_spec(BaselineId id);

struct BaselineRule {
    Weekday weekday = Weekday::Monday;
    std::vector<Interval> pieces;
    BehaviorLabel behavior;
    double confidence = 0.0;
    std::int64_t support_count = 0;
    std::int64_t matched_count = 0;

    int temporal_coverage_minutes() const;
};

struct BaselineResult {
    BaselineId id = BaselineId::BM1;
    std::vector<BaselineRule> rules;
    /// `rules` split into one TemporalRule per interval piece.
    std::vector<TemporalRule> temporal_rules;
    std::array<double, 7> day_applicability{};
    /// sum_d (S_d / S) * A_d, comparable with WeekResult::applicability.
    double applicability = 0.0;
    CoverageAccuracy coverage;
};

BaselineResult baseline_segmentation(BaselineId id, const WeekDatasets& week, ConfidenceThreshold t,
                                     std::int64_t min_support = 1);

}  // namespace bots
