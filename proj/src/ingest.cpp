#include "bots/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <istream>
#include <unordered_set>

namespace bots {

namespace {

bool read_digits(std::string_view text, std::size_t& pos, int max_digits, int& out) {
    std::size_t begin = pos;
    int value = 0;
    while (pos < text.size() && pos - begin < static_cast<std::size_t>(max_digits) &&
           text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        ++pos;
    }
    if (pos == begin) {
        return false;
    }
    out = value;
    return true;
}

std::chrono::year_month_day to_ymd(const LocalTime& t) {
    using namespace std::chrono;
    return year_month_day{year{t.year}, month{static_cast<unsigned>(t.month)}, day{static_cast<unsigned>(t.day)}};
}

bool valid(const LocalTime& t) {
    return to_ymd(t).ok() && t.hour >= 0 && t.hour < 24 && t.minute >= 0 && t.minute < 60 &&
           t.second >= 0 && t.second < 60;
}

std::string trim(std::string_view s) {
    auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

// Splits one CSV record. Double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(trim(current));
    return fields;
}

std::optional<std::size_t> column_index(const std::vector<std::string>& header,
                                        const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - header.begin());
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) {
            out += ", ";
        }
        out += item;
    }
    return out;
}

}  // namespace

Weekday LocalTime::weekday() const {
    const std::chrono::sys_days date{to_ymd(*this)};
    // iso_encoding: Monday = 1 ... Sunday = 7
    return static_cast<Weekday>(std::chrono::weekday{date}.iso_encoding() - 1);
}

std::optional<LocalTime> parse_timestamp(std::string_view text, std::string_view pattern) {
    LocalTime t;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != '%' || i + 1 == pattern.size()) {
            if (pos >= text.size() || text[pos] != pattern[i]) {
                return std::nullopt;
            }
            ++pos;
            continue;
        }
        char directive = pattern[++i];
        bool ok = true;
        switch (directive) {
            case 'Y': ok = read_digits(text, pos, 4, t.year); break;
            case 'm': ok = read_digits(text, pos, 2, t.month); break;
            case 'd': ok = read_digits(text, pos, 2, t.day); break;
            case 'H': ok = read_digits(text, pos, 2, t.hour); break;
            case 'M': ok = read_digits(text, pos, 2, t.minute); break;
            case 'S': ok = read_digits(text, pos, 2, t.second); break;
            case '%': ok = pos < text.size() && text[pos++] == '%'; break;
            default: throw Error("unsupported timestamp directive %" + std::string(1, directive));
        }
        if (!ok) {
            return std::nullopt;
        }
    }
    if (pos != text.size() || !valid(t)) {
        return std::nullopt;
    }
    return t;
}

std::string format_timestamp(const LocalTime& t, std::string_view pattern) {
    std::string out;
    char buf[16];
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != '%' || i + 1 == pattern.size()) {
            out.push_back(pattern[i]);
            continue;
        }
        switch (pattern[++i]) {
            case 'Y': std::snprintf(buf, sizeof buf, "%04d", t.year); break;
            case 'm': std::snprintf(buf, sizeof buf, "%02d", t.month); break;
            case 'd': std::snprintf(buf, sizeof buf, "%02d", t.day); break;
            case 'H': std::snprintf(buf, sizeof buf, "%02d", t.hour); break;
            case 'M': std::snprintf(buf, sizeof buf, "%02d", t.minute); break;
            case 'S': std::snprintf(buf, sizeof buf, "%02d", t.second); break;
            case '%': std::snprintf(buf, sizeof buf, "%%"); break;
            default: throw Error("unsupported timestamp directive");
        }
        out += buf;
    }
    return out;
}

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
    : Error("line " + std::to_string(line) + ", field '" + field + "': " + message),
      line_(line),
      field_(std::move(field)) {}

BehaviorLabel derive_call_behavior(std::string_view raw_type, std::int64_t duration_seconds) {
    if (duration_seconds < 0) {
        throw Error("negative call duration: " + std::to_string(duration_seconds));
    }
    if (raw_type == "INCOMING") {
        return BehaviorLabel(duration_seconds > 0 ? "ACCEPT" : "REJECT");
    }
    return BehaviorLabel(std::string(raw_type));
}

std::vector<BehaviorLabel> call_label_universe() {
    return {BehaviorLabel("ACCEPT"), BehaviorLabel("MISSED"), BehaviorLabel("OUTGOING"),
            BehaviorLabel("REJECT")};
}

std::vector<BehavioralTransaction> parse_log(std::istream& source, const LogFormatSpec& format) {
    std::vector<BehavioralTransaction> out;
    std::string line;
    std::size_t line_no = 0;

    std::vector<std::string> header;
    while (std::getline(source, line)) {
        ++line_no;
        if (!trim(line).empty()) {
            header = split_csv(line);
            break;
        }
    }
    if (header.empty()) {
        return out;
    }
    if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) {
        header[0].erase(0, 3);
    }

    auto require = [&](const std::string& name) {
        auto idx = column_index(header, name);
        if (!idx) {
            throw ParseError(line_no, name, "missing column in header");
        }
        return *idx;
    };
    const std::size_t ts_col = require(format.col_timestamp);
    const std::size_t type_col = require(format.col_type);
    const auto id_col = column_index(header, format.col_id);
    const auto dur_col = column_index(header, format.col_duration);

    std::unordered_set<std::string> seen_ids;
    while (std::getline(source, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        auto fields = split_csv(line);
        if (fields.size() != header.size()) {
            throw ParseError(line_no, "*",
                             "expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(fields.size()));
        }

        BehavioralTransaction tx;
        tx.id = id_col ? fields[*id_col] : std::to_string(line_no);
        if (tx.id.empty()) {
            throw ParseError(line_no, format.col_id, "empty id");
        }
        if (!seen_ids.insert(tx.id).second) {
            throw ParseError(line_no, format.col_id, "duplicate id '" + tx.id + "'");
        }

        auto ts = parse_timestamp(fields[ts_col], format.timestamp_format);
        if (!ts) {
            throw ParseError(line_no, format.col_timestamp,
                             "invalid timestamp '" + fields[ts_col] + "' for format '" +
                                 format.timestamp_format + "'");
        }
        tx.timestamp = *ts;

        tx.raw_type = fields[type_col];
        if (std::find(format.raw_types.begin(), format.raw_types.end(), tx.raw_type) ==
            format.raw_types.end()) {
            throw ParseError(line_no, format.col_type,
                             "unknown type '" + tx.raw_type + "', permitted: " +
                                 join(format.raw_types));
        }

        if (dur_col && !fields[*dur_col].empty()) {
            const std::string& text = fields[*dur_col];
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size()) {
                throw ParseError(line_no, format.col_duration, "not an integer: '" + text + "'");
            }
            if (value < 0) {
                throw ParseError(line_no, format.col_duration, "negative duration");
            }
            tx.duration_seconds = value;
        }
        if (tx.raw_type == "INCOMING" && !tx.duration_seconds) {
            throw ParseError(line_no, format.col_duration,
                             "INCOMING rows need a duration to derive ACCEPT/REJECT");
        }
        tx.label = derive_call_behavior(tx.raw_type, tx.duration_seconds.value_or(0));
        out.push_back(std::move(tx));
    }
    return out;
}

LabelCounts DayDataset::label_counts() const {
    LabelCounts counts;
    for (const auto& inst : instances) {
        counts.add(inst.label);
    }
    return counts;
}

WeekDatasets split_by_weekday(std::span<const BehavioralTransaction> transactions) {
    WeekDatasets week;
    for (Weekday day : kAllWeekdays) {
        week[index_of(day)].weekday = day;
    }
    for (const auto& tx : transactions) {
        week[index_of(tx.timestamp.weekday())].instances.push_back(
            {tx.timestamp.minute_of_day(), tx.label});
    }
    return week;
}

DayDataset collapse_week(std::span<const BehavioralTransaction> transactions) {
    DayDataset all;
    all.instances.reserve(transactions.size());
    for (const auto& tx : transactions) {
        all.instances.push_back({tx.timestamp.minute_of_day(), tx.label});
    }
    return all;
}

}  // namespace bots
