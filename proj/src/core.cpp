#include "bots/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace bots {

namespace {

constexpr std::array<std::string_view, 7> kWeekdayNames = {
    "Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

std::string_view to_string(Weekday day) { return kWeekdayNames[index_of(day)]; }

std::optional<Weekday> parse_weekday(std::string_view text) {
    for (Weekday day : kAllWeekdays) {
        std::string_view name = to_string(day);
        if (iequals(text, name) || iequals(text, name.substr(0, 3))) {
            return day;
        }
    }
    return std::nullopt;
}

BehaviorLabel::BehaviorLabel(std::string name) : name_(std::move(name)) {
    if (name_.empty()) {
        throw Error("behavior label must be non-empty");
    }
}

std::string format_clock(int minute) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%02d:%02d", minute / 60, minute % 60);
    return buf;
}

std::string format_interval(const Interval& interval) {
    return "[" + format_clock(interval.start) + "-" + format_clock(interval.end) + "]";
}

void LabelCounts::add(const BehaviorLabel& label, std::int64_t n) {
    if (n < 0) {
        throw Error("label counts must be non-negative");
    }
    if (n == 0) {
        return;
    }
    counts_[label] += n;
    total_ += n;
}

void LabelCounts::merge(const LabelCounts& other) {
    for (const auto& [label, n] : other.counts_) {
        add(label, n);
    }
}

std::int64_t LabelCounts::get(const BehaviorLabel& label) const {
    auto it = counts_.find(label);
    return it == counts_.end() ? 0 : it->second;
}

}  // namespace bots
