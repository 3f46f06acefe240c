#pragma once

// Independent from-definition recomputations used to check the library.
// Nothing here calls into slicing, dominance, aggregation or the optimizer.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bots/ingest.hpp"

namespace oracle {

/// A confidence threshold held as an exact fraction num/den.
struct Fraction {
    std::int64_t num;
    std::int64_t den;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline const std::vector<Fraction>& thresholds() {
    static const std::vector<Fraction> t = {{51, 100}, {3, 5}, {3, 4}, {9, 10}, {1, 1}};
    return t;
}

struct RawInstance {
    int minute;
    std::string label;
};

/// Dominant label of a count vector, exact rational test m/s >= num/den.
inline std::string dominant_of(const std::map<std::string, std::int64_t>& counts, Fraction t) {
    std::int64_t total = 0;
    for (const auto& [l, n] : counts) {
        total += n;
    }
    for (const auto& [l, n] : counts) {
        if (total > 0 && n * t.den >= t.num * total) {
            return l;
        }
    }
    return "";  // none
}

struct OracleSegment {
    int start;
    int end;
    std::string dominant;  // empty = none
    std::int64_t support;
    std::map<std::string, std::int64_t> counts;
};

/// Segments from first principles: bucket by minute / bp, label each bucket,
/// then group maximal runs of equal labels.
inline std::vector<OracleSegment> segments(const std::vector<RawInstance>& data, int bp, Fraction t) {
    const int n_slices = (1440 + bp - 1) / bp;
    std::vector<std::map<std::string, std::int64_t>> buckets(n_slices);
    for (const auto& inst : data) {
        ++buckets[inst.minute / bp][inst.label];
    }
    std::vector<OracleSegment> out;
    for (int i = 0; i < n_slices; ++i) {
        std::string label = dominant_of(buckets[i], t);
        int start = i * bp;
        int end = std::min(1440, start + bp);
        if (!out.empty() && out.back().dominant == label) {
            auto& seg = out.back();
            seg.end = end;
            for (const auto& [l, n] : buckets[i]) {
                seg.counts[l] += n;
                seg.support += n;
            }
        } else {
            OracleSegment seg{start, end, label, 0, buckets[i]};
            for (const auto& [l, n] : buckets[i]) {
                seg.support += n;
            }
            out.push_back(std::move(seg));
        }
    }
    return out;
}

/// Applicability straight from the formula, day-wise normalizers.
inline double applicability(const std::vector<RawInstance>& data, int bp, Fraction t) {
    if (data.empty()) {
        return 0.0;
    }
    const double s_max = static_cast<double>(data.size());
    double total = 0.0;
    for (const auto& seg : segments(data, bp, t)) {
        if (!seg.dominant.empty()) {
            total += (static_cast<double>(seg.support) / s_max) * (static_cast<double>(seg.end - seg.start) / 1440.0);
        }
    }
    return total;
}

struct SweepOutcome {
    int best_bp;
    double best_score;
    std::vector<double> scores;
};

inline SweepOutcome sweep(const std::vector<RawInstance>& data, const std::vector<int>& grid, Fraction t) {
    SweepOutcome out{grid.front(), -1.0, {}};
    for (int bp : grid) {
        double a = applicability(data, bp, t);
        out.scores.push_back(a);
        if (a > out.best_score + 1e-12) {
            out.best_score = a;
            out.best_bp = bp;
        }
    }
    return out;
}

/// Random day dataset: up to `max_n` instances over a few labels, with
/// occasional dense clusters so that dominance actually occurs.
inline std::vector<RawInstance> random_day(std::mt19937_64& rng, int max_n) {
    static const std::vector<std::string> labels = {"ACCEPT", "REJECT", "MISSED", "OUTGOING"};
    std::uniform_int_distribution<int> n_dist(0, max_n);
    std::uniform_int_distribution<int> label_count(1, 4);
    const int n = n_dist(rng);
    const int used_labels = label_count(rng);
    std::uniform_int_distribution<int> label_dist(0, used_labels - 1);
    std::uniform_int_distribution<int> minute_dist(0, 1439);
    std::uniform_int_distribution<int> cluster_width(5, 240);
    std::bernoulli_distribution clustered(0.5);

    std::vector<RawInstance> data;
    data.reserve(n);
    int cluster_start = minute_dist(rng);
    int width = cluster_width(rng);
    std::string cluster_label = labels[label_dist(rng)];
    for (int i = 0; i < n; ++i) {
        if (clustered(rng)) {
            int m = std::min(1439, cluster_start + std::uniform_int_distribution<int>(0, width - 1)(rng));
            data.push_back({m, std::bernoulli_distribution(0.85)(rng) ? cluster_label : labels[label_dist(rng)]});
        } else {
            data.push_back({minute_dist(rng), labels[label_dist(rng)]});
        }
    }
    return data;
}

inline bots::DayDataset to_day(const std::vector<RawInstance>& data, bots::Weekday day = bots::Weekday::Monday) {
    bots::DayDataset out;
    out.weekday = day;
    for (const auto& inst : data) {
        out.instances.push_back({inst.minute, bots::BehaviorLabel(inst.label)});
    }
    return out;
}

}  // namespace oracle
