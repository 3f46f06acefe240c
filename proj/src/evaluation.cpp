#include "bots/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace bots {

RulePredictor::RulePredictor(std::span<const TemporalRule> rules) {
    check_non_overlapping(rules);
    for (const auto& r : rules) {
        by_day_[index_of(r.weekday)].push_back(r);
    }
    for (auto& day : by_day_) {
        std::sort(day.begin(), day.end(), [](const TemporalRule& a, const TemporalRule& b) {
            return a.interval.start < b.interval.start;
        });
    }
}

const TemporalRule* RulePredictor::find(Weekday day, int minute) const {
    const auto& rules = by_day_[index_of(day)];
    auto it = std::upper_bound(rules.begin(), rules.end(), minute,
                               [](int m, const TemporalRule& r) { return m < r.interval.start; });
    if (it == rules.begin()) {
        return nullptr;
    }
    --it;
    return it->interval.contains(minute) ? &*it : nullptr;
}

std::optional<BehaviorLabel> RulePredictor::predict(Weekday day, int minute) const {
    const TemporalRule* rule = find(day, minute);
    if (!rule) {
        return std::nullopt;
    }
    return rule->behavior;
}

std::optional<BehaviorLabel> predict(std::span<const TemporalRule> rules, Weekday day, int minute) {
    return RulePredictor(rules).predict(day, minute);
}

namespace {

CoverageAccuracy finish(CoverageAccuracy ca) {
    if (ca.dataset_size == 0) {
        throw Error("coverage is undefined for an empty dataset");
    }
    ca.coverage_pct = 100.0 * static_cast<double>(ca.n_covers) / static_cast<double>(ca.dataset_size);
    ca.accuracy_defined = ca.n_covers > 0;
    ca.accuracy_pct = ca.accuracy_defined
                          ? 100.0 * static_cast<double>(ca.n_correct) / static_cast<double>(ca.n_covers)
                          : 0.0;
    return ca;
}

}  // namespace

CoverageAccuracy coverage_accuracy(std::span<const TemporalRule> rules, std::span<const DayDataset> days) {
    RulePredictor predictor(rules);
    CoverageAccuracy ca;
    for (const auto& day : days) {
        for (const auto& inst : day.instances) {
            ++ca.dataset_size;
            if (const TemporalRule* rule = predictor.find(day.weekday, inst.minute)) {
                ++ca.n_covers;
                if (rule->behavior == inst.label) {
                    ++ca.n_correct;
                }
            }
        }
    }
    return finish(ca);
}

CoverageAccuracy coverage_accuracy(const Segmentation& seg, const DayDataset& day) {
    auto rules = emit_rules(seg, day.total_count());
    for (auto& r : rules) {
        r.weekday = day.weekday;
    }
    return coverage_accuracy(rules, std::span(&day, 1));
}

PrecisionRecall precision_recall(std::span<const Prediction> predictions) {
    if (predictions.empty()) {
        throw Error("precision/recall needs at least one prediction");
    }
    PrecisionRecall pr;
    std::set<BehaviorLabel> actual_classes;
    for (const auto& [predicted, actual] : predictions) {
        actual_classes.insert(actual);
        if (!predicted) {
            ++pr.per_class[actual].fn;
        } else if (*predicted == actual) {
            ++pr.per_class[actual].tp;
        } else {
            ++pr.per_class[*predicted].fp;
            ++pr.per_class[actual].fn;
        }
    }

    double precision_sum = 0.0;
    double recall_sum = 0.0;
    for (const auto& label : actual_classes) {
        const auto& c = pr.per_class[label];
        if (c.tp + c.fp > 0) {
            precision_sum += static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
        } else {
            pr.precision_defined = false;
        }
        recall_sum += static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
    }
    const auto n = static_cast<double>(actual_classes.size());
    pr.precision = precision_sum / n;
    pr.recall = recall_sum / n;
    return pr;
}

std::vector<std::size_t> assign_folds(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 2) {
        throw Error("cross-validation needs at least 2 folds");
    }
    if (k > n) {
        throw Error("cannot split " + std::to_string(n) + " transactions into " + std::to_string(k) +
                    " folds");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::size_t> fold_of(n);
    for (std::size_t f = 0; f < k; ++f) {
        for (std::size_t i = f * n / k; i < (f + 1) * n / k; ++i) {
            fold_of[order[i]] = f;
        }
    }
    return fold_of;
}

CrossValidationReport cross_validate(std::span<const BehavioralTransaction> transactions,
                                     const MiningConfig& config, std::size_t k, std::uint64_t seed) {
    auto fold_of = assign_folds(transactions.size(), k, seed);

    CrossValidationReport report;
    report.k = k;
    report.seed = seed;
    for (std::size_t f = 0; f < k; ++f) {
        std::vector<BehavioralTransaction> train;
        std::vector<BehavioralTransaction> test;
        for (std::size_t i = 0; i < transactions.size(); ++i) {
            (fold_of[i] == f ? test : train).push_back(transactions[i]);
        }

        WeekResult mined = mine(train, config);
        RulePredictor predictor(mined.rules);
        std::vector<Prediction> predictions;
        predictions.reserve(test.size());
        for (const auto& tx : test) {
            predictions.emplace_back(predictor.predict(tx.timestamp.weekday(), tx.timestamp.minute_of_day()),
                                     tx.label);
        }

        FoldReport fold{f, train.size(), test.size(), precision_recall(predictions), {}};
        auto test_week = split_by_weekday(test);
        fold.coverage = coverage_accuracy(mined.rules, test_week);
        report.precision_defined = report.precision_defined && fold.scores.precision_defined;
        report.mean_precision += fold.scores.precision;
        report.mean_recall += fold.scores.recall;
        report.mean_coverage_pct += fold.coverage.coverage_pct;
        report.folds.push_back(std::move(fold));
    }
    const auto kd = static_cast<double>(k);
    report.mean_precision /= kd;
    report.mean_recall /= kd;
    report.mean_coverage_pct /= kd;
    return report;
}

// ---------------------------------------------------------------------------

std::string_view to_string(BaselineId id) {
    static constexpr std::array<std::string_view, 5> names = {"BM1", "BM2", "BM3", "BM4", "BM5"};
    return names[static_cast<std::size_t>(id)];
}

std::optional<BaselineId> parse_baseline(std::string_view text) {
    for (BaselineId id : kAllBaselines) {
        if (to_string(id) == text) {
            return id;
        }
    }
    return std::nullopt;
}

std::vector<Interval> BaselineSpec::boundaries() const {
    std::vector<Interval> out;
    for (const auto& slot : slots) {
        out.insert(out.end(), slot.begin(), slot.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr int h(int hours) { return hours * 60; }

std::vector<std::vector<Interval>> equal_slots(int minutes) {
    std::vector<std::vector<Interval>> slots;
    for (const auto& b : generate_slice_boundaries(BasePeriod(minutes))) {
        slots.push_back({b});
    }
    return slots;
}

}  // namespace

BaselineSpec baseline_spec(BaselineId id) {
    BaselineSpec spec{id, {}};
    switch (id) {
        case BaselineId::BM1: spec.slots = equal_slots(15); break;
        case BaselineId::BM2:
            spec.slots = {{{h(6), h(12)}},
                          {{h(12), h(16)}},
                          {{h(16), h(20)}},
                          {{0, h(6)}, {h(20), h(24)}}};
            break;
        case BaselineId::BM3:
            spec.slots = {{{h(7), h(11)}},
                          {{h(11), h(14)}},
                          {{h(14), h(18)}},
                          {{h(18), h(21)}},
                          {{0, h(7)}, {h(21), h(24)}}};
            break;
        case BaselineId::BM4: spec.slots = equal_slots(240); break;
        case BaselineId::BM5: spec.slots = equal_slots(180); break;
    }
    check_day_partition(spec.boundaries());
    return spec;
}

int BaselineRule::temporal_coverage_minutes() const {
    int total = 0;
    for (const auto& p : pieces) {
        total += p.length();
    }
    return total;
}

BaselineResult baseline_segmentation(BaselineId id, const WeekDatasets& week, ConfidenceThreshold t,
                                     std::int64_t min_support) {
    if (min_support < 1) {
        throw Error("minimum support must be at least 1");
    }
    const BaselineSpec spec = baseline_spec(id);
    BaselineResult result;
    result.id = id;

    std::int64_t log_size = 0;
    for (const auto& day : week) {
        log_size += day.total_count();
    }

    for (const auto& day : week) {
        std::vector<LabelCounts> slot_counts(spec.slots.size());
        for (const auto& inst : day.instances) {
            for (std::size_t s = 0; s < spec.slots.size(); ++s) {
                const auto& pieces = spec.slots[s];
                if (std::any_of(pieces.begin(), pieces.end(),
                                [&](const Interval& p) { return p.contains(inst.minute); })) {
                    slot_counts[s].add(inst.label);
                    break;
                }
            }
        }

        double day_score = 0.0;
        for (std::size_t s = 0; s < spec.slots.size(); ++s) {
            auto dom = identify_dominant(slot_counts[s], t);
            if (!dom.dominant) {
                continue;
            }
            BaselineRule rule{day.weekday, spec.slots[s], *dom.dominant, dom.ratio,
                              slot_counts[s].total(), slot_counts[s].get(*dom.dominant)};
            day_score += static_cast<double>(rule.support_count) / static_cast<double>(day.total_count()) *
                         static_cast<double>(rule.temporal_coverage_minutes()) / kMinutesPerDay;
            if (rule.support_count >= min_support) {
                result.rules.push_back(std::move(rule));
            }
        }
        result.day_applicability[index_of(day.weekday)] = day_score;
        if (log_size > 0) {
            result.applicability +=
                static_cast<double>(day.total_count()) / static_cast<double>(log_size) * day_score;
        }
    }

    for (const auto& rule : result.rules) {
        for (const auto& piece : rule.pieces) {
            result.temporal_rules.push_back({rule.weekday, piece, rule.behavior, rule.confidence,
                                             rule.support_count, rule.matched_count,
                                             week[index_of(rule.weekday)].total_count()});
        }
    }
    std::sort(result.temporal_rules.begin(), result.temporal_rules.end(),
              [](const TemporalRule& a, const TemporalRule& b) {
                  return std::pair(a.weekday, a.interval.start) < std::pair(b.weekday, b.interval.start);
              });
    if (log_size > 0) {
        result.coverage = coverage_accuracy(result.temporal_rules, week);
    }
    return result;
}

}  // namespace bots
