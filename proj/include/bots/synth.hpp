#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bots/ingest.hpp"

namespace bots {

/// A weekly habit: every week, `events_per_week` events fall uniformly in
/// `interval` on `weekday`; each carries `behavior` with probability
/// `adherence`, otherwise a uniformly drawn other label of the universe.
struct PlantedPattern {
    Weekday weekday = Weekday::Monday;
    Interval interval;
    BehaviorLabel behavior;
    double adherence = 1.0;
    int events_per_week = 1;
};

struct GeneratorSpec {
    int weeks = 20;
    /// Any date; generation starts on the Monday of its week.
    LocalTime start{2004, 9, 13, 0, 0, 0};
    std::vector<BehaviorLabel> universe = call_label_universe();
    std::vector<PlantedPattern> patterns;
    /// Events per calendar day outside planted windows, labels uniform over the universe.
    int background_per_day = 0;
    std::uint64_t seed = 1;
};

/// Throws on overlapping planted intervals within a weekday, out-of-range
/// rates, or behaviors outside the universe.
void validate(const GeneratorSpec& spec);

/// Deterministic for a given spec (seed included). Transactions are in
/// timestamp order with ids 1..N.
std::vector<BehavioralTransaction> generate(const GeneratorSpec& spec);

/// Raw call category and duration that normalize back to `label`.
std::pair<std::string, std::int64_t> raw_call_fields(const BehaviorLabel& label, std::int64_t answered_seconds);

/// Writes the ingest schema (header `id,timestamp,type,duration` by default).
void write_log_csv(std::ostream& out, std::span<const BehavioralTransaction> transactions,
                   const LogFormatSpec& format = {});

}  // namespace bots
