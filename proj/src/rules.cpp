#include "bots/rules.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace bots {

std::vector<TemporalRule> emit_rules(const Segmentation& seg, std::int64_t dataset_size,
                                     std::int64_t min_support) {
    if (min_support < 1) {
        throw Error("minimum support must be at least 1");
    }
    std::vector<TemporalRule> rules;
    for (const auto& s : filter_segments(seg)) {
        if (s.support() < min_support) {
            continue;
        }
        const BehaviorLabel& behavior = *s.dominance.dominant;
        TemporalRule rule;
        rule.weekday = seg.weekday;
        rule.interval = s.interval;
        rule.behavior = behavior;
        rule.support_count = s.support();
        rule.matched_count = s.counts.get(behavior);
        rule.confidence = static_cast<double>(rule.matched_count) / static_cast<double>(rule.support_count);
        rule.dataset_size = dataset_size;
        rules.push_back(std::move(rule));
    }
    return rules;
}

std::vector<TemporalRule> emit_rules(const OptimalResult& opt, std::int64_t min_support) {
    return emit_rules(opt.segmentation, opt.report.s_max, min_support);
}

void check_non_overlapping(std::span<const TemporalRule> rules) {
    std::vector<const TemporalRule*> sorted;
    sorted.reserve(rules.size());
    for (const auto& r : rules) {
        sorted.push_back(&r);
    }
    std::sort(sorted.begin(), sorted.end(), [](const TemporalRule* a, const TemporalRule* b) {
        return std::pair(a->weekday, a->interval.start) < std::pair(b->weekday, b->interval.start);
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const auto& prev = *sorted[i - 1];
        const auto& cur = *sorted[i];
        if (prev.weekday == cur.weekday && cur.interval.start < prev.interval.end) {
            throw Error("overlapping rules on " + std::string(to_string(cur.weekday)) + ": " +
                        format_interval(prev.interval) + " and " + format_interval(cur.interval));
        }
    }
}

std::vector<TemporalRule> merge_week(std::span<const std::vector<TemporalRule>> per_day) {
    std::array<bool, 7> seen{};
    std::vector<TemporalRule> merged;
    for (const auto& rules : per_day) {
        if (rules.empty()) {
            continue;
        }
        Weekday day = rules.front().weekday;
        for (const auto& r : rules) {
            if (r.weekday != day) {
                throw Error("a per-day rule list mixes weekdays");
            }
        }
        if (seen[index_of(day)]) {
            throw Error("weekday " + std::string(to_string(day)) + " contributes more than once");
        }
        seen[index_of(day)] = true;
        merged.insert(merged.end(), rules.begin(), rules.end());
    }
    std::stable_sort(merged.begin(), merged.end(), [](const TemporalRule& a, const TemporalRule& b) {
        return std::pair(a.weekday, a.interval.start) < std::pair(b.weekday, b.interval.start);
    });
    check_non_overlapping(merged);
    return merged;
}

std::string display_behavior(const BehaviorLabel& label) {
    std::string out = label.name();
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto c = static_cast<unsigned char>(out[i]);
        out[i] = static_cast<char>(i == 0 ? std::toupper(c) : std::tolower(c));
    }
    return out;
}

std::string render_rules_table(std::span<const TemporalRule> rules) {
    std::ostringstream out;
    for (const auto& r : rules) {
        out << "Day → " << to_string(r.weekday) << ", TimeSegment → "
            << format_interval(r.interval) << " ⇒ Behavior → " << display_behavior(r.behavior)
            << ", " << std::lround(r.confidence * 100.0) << "%\n";
    }
    return out.str();
}

}  // namespace bots
