#include "bots/pipeline.hpp"

namespace bots {

std::string_view to_string(Mode mode) { return mode == Mode::DayWise ? "day-wise" : "whole-week"; }

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "day-wise") {
        return Mode::DayWise;
    }
    if (text == "whole-week") {
        return Mode::WholeWeek;
    }
    return std::nullopt;
}

double weekly_applicability(std::span<const OptimalResult> day_optima) {
    std::int64_t total = 0;
    for (const auto& opt : day_optima) {
        total += opt.report.s_max;
    }
    if (total == 0) {
        return 0.0;
    }
    double sum = 0.0;
    for (const auto& opt : day_optima) {
        sum += static_cast<double>(opt.report.s_max) / static_cast<double>(total) * opt.report.applicability;
    }
    return sum;
}

WeekResult mine(std::span<const BehavioralTransaction> transactions, const MiningConfig& config) {
    WeekResult result;
    result.mode = config.mode;
    result.log_size = static_cast<std::int64_t>(transactions.size());

    if (config.mode == Mode::DayWise) {
        std::vector<std::vector<TemporalRule>> per_day;
        for (const auto& day : split_by_weekday(transactions)) {
            result.optima.push_back(find_optimal(day, config.threshold, config.grid));
            per_day.push_back(emit_rules(result.optima.back(), config.min_support));
        }
        result.rules = merge_week(per_day);
        result.applicability = weekly_applicability(result.optima);
        return result;
    }

    DayDataset folded = collapse_week(transactions);
    result.optima.push_back(find_optimal(folded, config.threshold, config.grid,
                                         ScoringFrame::whole_week(result.log_size)));
    const auto& opt = result.optima.front();
    auto rules = emit_rules(opt.segmentation, result.log_size, config.min_support);
    for (Weekday day : kAllWeekdays) {
        for (auto r : rules) {
            r.weekday = day;
            result.rules.push_back(std::move(r));
        }
    }
    result.applicability = opt.report.applicability;
    return result;
}

}  // namespace bots
