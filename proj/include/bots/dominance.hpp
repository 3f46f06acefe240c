#pragma once

#include <optional>

#include "bots/core.hpp"

namespace bots {

/// Preferred rule confidence. Values above one half make the dominant
/// behavior of any slice unique.
class ConfidenceThreshold {
public:
    explicit ConfidenceThreshold(double value);

    double value() const { return value_; }
    /// Inclusive, with 1e-9 slack so that e.g. 3/4 passes 0.75.
    bool admits(double ratio) const { return ratio + 1e-9 >= value_; }
    auto operator<=>(const ConfidenceThreshold&) const = default;

private:
    double value_;
};

struct DominanceResult {
    std::optional<BehaviorLabel> dominant;
    /// Share of the most frequent label; 0 for empty counts.
    double ratio = 0.0;

    bool operator==(const DominanceResult&) const = default;
};

/// The most frequent label if its share reaches `t`. Ties on the maximum
/// resolve to the lexicographically smallest label (only observable below t).
DominanceResult identify_dominant(const LabelCounts& counts, ConfidenceThreshold t);

}  // namespace bots
