#pragma once

#include <span>
#include <string>
#include <vector>

#include "bots/optimizer.hpp"

namespace bots {

/// (weekday, time segment) => behavior.
struct TemporalRule {
    Weekday weekday = Weekday::Monday;
    Interval interval;
    BehaviorLabel behavior;
    /// matched_count / support_count
    double confidence = 0.0;
    /// Instances inside the segment (Rsup).
    std::int64_t support_count = 0;
    /// Instances inside the segment carrying `behavior`.
    std::int64_t matched_count = 0;
    /// Instances of the dataset the rule was mined from.
    std::int64_t dataset_size = 0;

    int temporal_coverage_minutes() const { return interval.length(); }
    /// Joint frequency of antecedent and consequent over the mined dataset.
    double support() const {
        return dataset_size > 0 ? static_cast<double>(matched_count) / static_cast<double>(dataset_size) : 0.0;
    }
};

/// One rule per dominant-bearing segment with at least `min_support`
/// instances, in time order.
std::vector<TemporalRule> emit_rules(const Segmentation& seg, std::int64_t dataset_size,
                                     std::int64_t min_support = 1);
std::vector<TemporalRule> emit_rules(const OptimalResult& opt, std::int64_t min_support = 1);

/// Concatenates per-weekday rule lists ordered by (weekday, start). Each list
/// must hold a single weekday, and no weekday may appear in two lists.
std::vector<TemporalRule> merge_week(std::span<const std::vector<TemporalRule>> per_day);

/// Throws if two rules of the same weekday overlap in time.
void check_non_overlapping(std::span<const TemporalRule> rules);

/// "MISSED" -> "Missed"
std::string display_behavior(const BehaviorLabel& label);

/// One line per rule:
/// `Day → Saturday, TimeSegment → [19:00-20:00] ⇒ Behavior → Missed, 85%`
std::string render_rules_table(std::span<const TemporalRule> rules);

}  // namespace bots
