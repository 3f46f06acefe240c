#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bots {

inline constexpr int kMinutesPerDay = 1440;
inline constexpr int kMinutesPerWeek = 7 * kMinutesPerDay;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Day of week, Monday first. The numeric value doubles as an array index.
enum class Weekday : int { Monday = 0, Tuesday, Wednesday, Thursday, Friday, Saturday, Sunday };

inline constexpr std::array<Weekday, 7> kAllWeekdays = {
    Weekday::Monday, Weekday::Tuesday,  Weekday::Wednesday, Weekday::Thursday,
    Weekday::Friday, Weekday::Saturday, Weekday::Sunday};

std::string_view to_string(Weekday day);
/// Case-insensitive; accepts full names and three-letter abbreviations.
std::optional<Weekday> parse_weekday(std::string_view text);

inline constexpr int index_of(Weekday day) { return static_cast<int>(day); }

/// A behavior class such as ACCEPT or MISSED. Ordered so it can key maps.
class BehaviorLabel {
public:
    BehaviorLabel() = default;
    explicit BehaviorLabel(std::string name);

    const std::string& name() const { return name_; }
    auto operator<=>(const BehaviorLabel&) const = default;

private:
    std::string name_;
};

/// Half-open minute interval [start, end).
struct Interval {
    int start = 0;
    int end = 0;

    int length() const { return end - start; }
    bool contains(int minute) const { return start <= minute && minute < end; }
    auto operator<=>(const Interval&) const = default;
};

/// "HH:MM". 1440 renders as "24:00".
std::string format_clock(int minute);
/// "[HH:MM-HH:MM]"
std::string format_interval(const Interval& interval);

/// Per-label occurrence counts of a slice or segment.
class LabelCounts {
public:
    using Map = std::map<BehaviorLabel, std::int64_t>;

    void add(const BehaviorLabel& label, std::int64_t n = 1);
    void merge(const LabelCounts& other);

    std::int64_t get(const BehaviorLabel& label) const;
    std::int64_t total() const { return total_; }
    bool empty() const { return total_ == 0; }
    const Map& entries() const { return counts_; }

    bool operator==(const LabelCounts&) const = default;

private:
    Map counts_;
    std::int64_t total_ = 0;
};

}  // namespace bots
