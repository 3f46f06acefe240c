#include "bots/synth.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <random>

namespace bots {

void validate(const GeneratorSpec& spec) {
    if (spec.weeks < 1) {
        throw Error("generator needs at least one week");
    }
    if (spec.background_per_day < 0) {
        throw Error("background rate must be non-negative");
    }
    if (spec.universe.empty()) {
        throw Error("label universe must not be empty");
    }
    for (const auto& p : spec.patterns) {
        if (p.interval.start < 0 || p.interval.end > kMinutesPerDay || p.interval.length() <= 0) {
            throw Error("planted interval " + format_interval(p.interval) + " is not within one day");
        }
        if (!(p.adherence >= 0.0 && p.adherence <= 1.0)) {
            throw Error("adherence must be within [0, 1]");
        }
        if (p.events_per_week < 0) {
            throw Error("events per week must be non-negative");
        }
        if (std::find(spec.universe.begin(), spec.universe.end(), p.behavior) == spec.universe.end()) {
            throw Error("planted behavior " + p.behavior.name() + " is not in the label universe");
        }
        if (p.adherence < 1.0 && spec.universe.size() < 2) {
            throw Error("non-adherent events need a second label in the universe");
        }
    }
    for (std::size_t i = 0; i < spec.patterns.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.patterns.size(); ++j) {
            const auto& a = spec.patterns[i];
            const auto& b = spec.patterns[j];
            if (a.weekday == b.weekday && a.interval.start < b.interval.end &&
                b.interval.start < a.interval.end) {
                throw Error("planted intervals overlap on " + std::string(to_string(a.weekday)) + ": " +
                            format_interval(a.interval) + " and " + format_interval(b.interval));
            }
        }
    }
}

std::pair<std::string, std::int64_t> raw_call_fields(const BehaviorLabel& label, std::int64_t answered_seconds) {
    const std::string& name = label.name();
    if (name == "ACCEPT") {
        return {"INCOMING", std::max<std::int64_t>(answered_seconds, 1)};
    }
    if (name == "REJECT") {
        return {"INCOMING", 0};
    }
    if (name == "OUTGOING") {
        return {"OUTGOING", std::max<std::int64_t>(answered_seconds, 1)};
    }
    return {name, 0};
}

std::vector<BehavioralTransaction> generate(const GeneratorSpec& spec) {
    validate(spec);
    using namespace std::chrono;

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<int> second_dist(0, 59);
    std::uniform_int_distribution<std::int64_t> talk_dist(1, 600);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    const sys_days start{year_month_day{year{spec.start.year}, month{static_cast<unsigned>(spec.start.month)},
                                        day{static_cast<unsigned>(spec.start.day)}}};
    const sys_days monday = start - days{index_of(spec.start.weekday())};

    struct Event {
        sys_days date;
        int minute;
        int second;
        BehaviorLabel label;
    };
    std::vector<Event> events;

    auto planted_at = [&](Weekday wd, int minute) {
        return std::any_of(spec.patterns.begin(), spec.patterns.end(), [&](const PlantedPattern& p) {
            return p.weekday == wd && p.interval.contains(minute);
        });
    };
    int free_minutes[7] = {};
    for (Weekday wd : kAllWeekdays) {
        for (int m = 0; m < kMinutesPerDay; ++m) {
            free_minutes[index_of(wd)] += planted_at(wd, m) ? 0 : 1;
        }
    }

    for (int week = 0; week < spec.weeks; ++week) {
        for (Weekday wd : kAllWeekdays) {
            const sys_days date = monday + days{7 * week + index_of(wd)};
            for (const auto& p : spec.patterns) {
                if (p.weekday != wd) {
                    continue;
                }
                std::uniform_int_distribution<int> minute_dist(p.interval.start, p.interval.end - 1);
                for (int e = 0; e < p.events_per_week; ++e) {
                    int minute = minute_dist(rng);
                    BehaviorLabel label = p.behavior;
                    if (unit(rng) >= p.adherence) {
                        std::vector<BehaviorLabel> others;
                        for (const auto& l : spec.universe) {
                            if (l != p.behavior) {
                                others.push_back(l);
                            }
                        }
                        label = others[pick(others.size())];
                    }
                    events.push_back({date, minute, second_dist(rng), std::move(label)});
                }
            }
            if (free_minutes[index_of(wd)] == 0) {
                continue;
            }
            std::uniform_int_distribution<int> any_minute(0, kMinutesPerDay - 1);
            for (int e = 0; e < spec.background_per_day; ++e) {
                int minute = any_minute(rng);
                while (planted_at(wd, minute)) {
                    minute = any_minute(rng);
                }
                events.push_back({date, minute, second_dist(rng), spec.universe[pick(spec.universe.size())]});
            }
        }
    }

    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return std::tie(a.date, a.minute, a.second) < std::tie(b.date, b.minute, b.second);
    });

    std::vector<BehavioralTransaction> out;
    out.reserve(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& ev = events[i];
        const year_month_day ymd{ev.date};
        BehavioralTransaction tx;
        tx.id = std::to_string(i + 1);
        tx.timestamp = {static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
                        static_cast<int>(static_cast<unsigned>(ymd.day())), ev.minute / 60, ev.minute % 60,
                        ev.second};
        auto [raw, duration] = raw_call_fields(ev.label, talk_dist(rng));
        tx.raw_type = std::move(raw);
        tx.duration_seconds = duration;
        tx.label = ev.label;
        out.push_back(std::move(tx));
    }
    return out;
}

void write_log_csv(std::ostream& out, std::span<const BehavioralTransaction> transactions,
                   const LogFormatSpec& format) {
    out << format.col_id << ',' << format.col_timestamp << ',' << format.col_type << ','
        << format.col_duration << '\n';
    for (const auto& tx : transactions) {
        out << tx.id << ',' << format_timestamp(tx.timestamp, format.timestamp_format) << ','
            << tx.raw_type << ',';
        if (tx.duration_seconds) {
            out << *tx.duration_seconds;
        }
        out << '\n';
    }
}

}  // namespace bots
