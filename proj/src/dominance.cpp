#include "bots/dominance.hpp"

#include <cmath>

namespace bots {

ConfidenceThreshold::ConfidenceThreshold(double value) : value_(value) {
    if (!(value > 0.5 && value <= 1.0)) {
        throw Error("confidence threshold must be in (0.5, 1.0], got " + std::to_string(value));
    }
}

DominanceResult identify_dominant(const LabelCounts& counts, ConfidenceThreshold t) {
    if (counts.empty()) {
        return {};
    }
    const BehaviorLabel* top = nullptr;
    std::int64_t top_count = 0;
    for (const auto& [label, n] : counts.entries()) {
        if (n > top_count) {
            top = &label;
            top_count = n;
        }
    }
    DominanceResult result;
    result.ratio = static_cast<double>(top_count) / static_cast<double>(counts.total());
    if (t.admits(result.ratio)) {
        result.dominant = *top;
    }
    return result;
}

}  // namespace bots
