#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bots/rules.hpp"

namespace bots {

enum class Mode { DayWise, WholeWeek };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

struct MiningConfig {
    ConfidenceThreshold threshold{0.75};
    std::vector<BasePeriod> grid = default_grid();
    std::int64_t min_support = 1;
    Mode mode = Mode::DayWise;
};

/// Output of mining one log. Day-wise mode holds seven per-weekday optima;
/// whole-week mode holds a single optimum over the folded time-of-day axis
/// whose rules are replicated onto every weekday.
struct WeekResult {
    Mode mode = Mode::DayWise;
    std::vector<OptimalResult> optima;
    std::vector<TemporalRule> rules;
    /// Week-level applicability with every rule normalized by the whole log
    /// and a rule's coverage counted once per weekday it recurs on.
    double applicability = 0.0;
    std::int64_t log_size = 0;
};

WeekResult mine(std::span<const BehavioralTransaction> transactions, const MiningConfig& config);

/// Support-weighted mean of per-day applicability: sum_d (S_d / S) * A_d.
double weekly_applicability(std::span<const OptimalResult> day_optima);

}  // namespace bots
