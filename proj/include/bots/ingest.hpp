#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bots/core.hpp"

namespace bots {

/// Naive local calendar instant with minute precision (seconds kept for
/// round-tripping but ignored by everything downstream).
struct LocalTime {
    int year = 0;
    int month = 0;
    int day = 0;
    int hour = 0;
    int minute = 0;
    int second = 0;

    Weekday weekday() const;
    /// Seconds are truncated.
    int minute_of_day() const { return hour * 60 + minute; }
    auto operator<=>(const LocalTime&) const = default;
};

/// Parses `text` against a strftime-style pattern. Supported directives:
/// %Y %m %d %H %M %S and %%; everything else must match literally.
/// Returns nullopt on mismatch or an invalid calendar instant.
std::optional<LocalTime> parse_timestamp(std::string_view text, std::string_view pattern);
std::string format_timestamp(const LocalTime& time, std::string_view pattern);

inline constexpr std::string_view kDefaultTimestampFormat = "%Y-%m-%d %H:%M:%S";

struct LogFormatSpec {
    std::string col_id = "id";
    std::string col_timestamp = "timestamp";
    std::string col_type = "type";
    std::string col_duration = "duration";
    std::string timestamp_format = std::string(kDefaultTimestampFormat);
    /// Permitted raw event categories. INCOMING is normalized to
    /// ACCEPT/REJECT; every other category passes through as its own label.
    std::vector<std::string> raw_types = {"INCOMING", "MISSED", "OUTGOING"};
};

struct BehavioralTransaction {
    std::string id;
    LocalTime timestamp;
    std::string raw_type;
    std::optional<std::int64_t> duration_seconds;
    BehaviorLabel label;
};

/// Thrown for malformed input rows. `line` is 1-based and counts the header.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string field, const std::string& message);

    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

/// Reads a CSV log with a header row. One transaction per data row, in file order.
std::vector<BehavioralTransaction> parse_log(std::istream& source, const LogFormatSpec& format = {});

/// INCOMING with a positive duration was answered (ACCEPT), with zero
/// duration it was declined (REJECT). Other categories pass through.
BehaviorLabel derive_call_behavior(std::string_view raw_type, std::int64_t duration_seconds);

/// The labels a call log can produce after normalization.
std::vector<BehaviorLabel> call_label_universe();

struct Instance {
    int minute = 0;
    BehaviorLabel label;
};

/// All instances of one weekday, merged across calendar weeks.
struct DayDataset {
    Weekday weekday = Weekday::Monday;
    std::vector<Instance> instances;

    std::int64_t total_count() const { return static_cast<std::int64_t>(instances.size()); }
    LabelCounts label_counts() const;
};

using WeekDatasets = std::array<DayDataset, 7>;

WeekDatasets split_by_weekday(std::span<const BehavioralTransaction> transactions);

/// Folds every weekday onto one time-of-day axis (the "without day-wise" view).
DayDataset collapse_week(std::span<const BehavioralTransaction> transactions);

}  // namespace bots
