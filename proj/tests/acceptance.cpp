// End-to-end acceptance checks. One PASS/FAIL line per criterion; exit
// status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bots/aggregation.hpp"
#include "bots/dominance.hpp"
#include "bots/evaluation.hpp"
#include "bots/optimizer.hpp"
#include "bots/pipeline.hpp"
#include "bots/rules.hpp"
#include "bots/slicing.hpp"
#include "bots/synth.hpp"
#include "oracle.hpp"

using namespace bots;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

LabelCounts counts(std::initializer_list<std::pair<const char*, std::int64_t>> items) {
    LabelCounts c;
    for (const auto& [label, n] : items) {
        c.add(BehaviorLabel(label), n);
    }
    return c;
}

std::vector<int> grid_minutes(std::span<const BasePeriod> grid) {
    std::vector<int> out;
    for (auto bp : grid) {
        out.push_back(bp.minutes());
    }
    return out;
}

Outcome slice_counts() {
    Outcome o;
    auto n5 = generate_slice_boundaries(BasePeriod(5)).size();
    auto n10 = generate_slice_boundaries(BasePeriod(10)).size();
    if (n5 != 288 || n10 != 144) {
        o.fail("bp=5 -> " + std::to_string(n5) + ", bp=10 -> " + std::to_string(n10));
    }
    o.detail = o.pass ? "bp=5 -> 288 slices, bp=10 -> 144 slices" : o.detail;
    return o;
}

Outcome dominance_fixtures() {
    Outcome o;
    auto tied = counts({{"BH1", 45}, {"BH2", 45}, {"BH3", 10}});
    for (double t : {0.501, 0.51, 0.6, 0.75, 0.9, 1.0}) {
        if (identify_dominant(tied, ConfidenceThreshold(t)).dominant) {
            o.fail("{45,45,10} dominant at t=" + std::to_string(t));
        }
    }
    auto skewed = counts({{"BH1", 55}, {"BH2", 40}, {"BH3", 5}});
    if (identify_dominant(skewed, ConfidenceThreshold(0.51)).dominant != BehaviorLabel("BH1")) {
        o.fail("{55,40,5} not dominant at t=0.51");
    }
    if (identify_dominant(skewed, ConfidenceThreshold(0.75)).dominant) {
        o.fail("{55,40,5} dominant at t=0.75");
    }

    std::vector<LabelCounts> six = {counts({{"BH2", 12}}),
                                    counts({{"BH2", 83}, {"BH3", 8}, {"BH4", 9}}),
                                    counts({{"BH2", 9}, {"BH1", 1}}),
                                    counts({{"BH2", 4}, {"BH3", 1}}),
                                    counts({{"BH1", 5}, {"BH2", 5}}),
                                    counts({{"BH3", 6}, {"BH4", 4}})};
    auto bounds = generate_slice_boundaries(BasePeriod(240));
    std::vector<TimeSlice> slices;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        slices.push_back({bounds[i], six[i]});
    }
    auto segs = aggregate(slices, ConfidenceThreshold(0.75));
    bool two = segs.size() == 2 && segs[0].interval == Interval{0, 960} &&
               segs[0].dominance.dominant == BehaviorLabel("BH2") && segs[1].interval == Interval{960, 1440} &&
               !segs[1].has_dominant();
    if (!two) {
        o.fail("six-slice scenario gave " + std::to_string(segs.size()) + " segments");
    }
    if (o.pass) {
        o.detail = "{45,45,10} none; {55,40,5} dominant at 0.51 only; six slices -> 2 segments";
    }
    return o;
}

Outcome applicability_oracle() {
    Outcome o;
    const auto start = Clock::now();
    std::mt19937_64 rng(20240901);
    const auto grid = default_grid();
    const auto grid_int = grid_minutes(grid);
    double worst = 0.0;
    const int n_datasets = 10000;
    for (int i = 0; i < n_datasets && o.pass; ++i) {
        auto data = oracle::random_day(rng, 200);
        const auto& t = oracle::thresholds()[static_cast<std::size_t>(i) % oracle::thresholds().size()];
        auto expected = oracle::sweep(data, grid_int, t);
        auto got = find_optimal(oracle::to_day(data), ConfidenceThreshold(t.value()), grid);
        for (std::size_t g = 0; g < grid.size(); ++g) {
            double a = got.sweep[g].applicability;
            if (!(a >= 0.0 && a <= 1.0)) {
                o.fail("dataset " + std::to_string(i) + ": applicability " + std::to_string(a) + " out of [0,1]");
            }
            worst = std::max(worst, std::abs(a - expected.scores[g]));
        }
        if (got.optimal_base_period.minutes() != expected.best_bp) {
            o.fail("dataset " + std::to_string(i) + ": bp " + std::to_string(got.optimal_base_period.minutes()) +
                   " vs oracle " + std::to_string(expected.best_bp));
        }
    }
    if (worst > 1e-12) {
        o.fail("max |pipeline - oracle| = " + std::to_string(worst));
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        o.fail("took " + std::to_string(elapsed) + " s");
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d datasets, max deviation %.1e, argmax agrees, %.1f s", n_datasets, worst,
                      elapsed);
        o.detail = buf;
    }
    return o;
}

Outcome training_accuracy_floor() {
    Outcome o;
    std::mt19937_64 rng(77);
    const auto grid = default_grid();
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        auto day = oracle::to_day(oracle::random_day(rng, 200));
        for (double t : {0.51, 0.75, 0.9}) {
            auto best = find_optimal(day, ConfidenceThreshold(t), grid);
            if (day.instances.empty()) {
                continue;
            }
            auto ca = coverage_accuracy(best.segmentation, day);
            if (!ca.accuracy_defined) {
                continue;
            }
            ++checked;
            // dominance admits a ratio within 1e-9 below t; nothing else is tolerated
            if (static_cast<double>(ca.n_correct) + 1e-9 * static_cast<double>(ca.n_covers) <
                t * static_cast<double>(ca.n_covers)) {
                o.fail("accuracy " + std::to_string(ca.accuracy_pct) + "% below t=" + std::to_string(t));
            }
        }
    }
    if (o.pass) {
        o.detail = std::to_string(checked) + " (dataset, t) pairs, accuracy_pct >= 100 t in all";
    }
    return o;
}

Outcome threshold_monotonicity() {
    Outcome o;
    std::mt19937_64 rng(5150);
    const auto grid = default_grid();
    const std::vector<double> ts = {0.51, 0.6, 0.7, 0.75, 0.8, 0.9, 1.0};
    int datasets = 0;
    int optimum_coverage_rises = 0;
    for (int i = 0; i < 1000; ++i) {
        auto day = oracle::to_day(oracle::random_day(rng, 200));
        if (day.instances.empty()) {
            continue;
        }
        ++datasets;
        // Per base period: both applicability and coverage are non-increasing in t.
        for (int bp : {5, 15, 30, 60, 85, 120, 240}) {
            auto bounds = generate_slice_boundaries(BasePeriod(bp));
            auto slices = populate_slices(day, bounds);
            double prev_a = 2.0;
            double prev_c = 101.0;
            for (double t : ts) {
                auto seg = aggregate(slices, day.weekday, BasePeriod(bp), ConfidenceThreshold(t));
                double a = score(filter_segments(seg), BasePeriod(bp), ScoringFrame::day_wise(day)).applicability;
                double c = coverage_accuracy(seg, day).coverage_pct;
                if (a > prev_a + 1e-12 || c > prev_c + 1e-9) {
                    o.fail("dataset " + std::to_string(i) + " bp=" + std::to_string(bp) + " rises at t=" +
                           std::to_string(t));
                }
                prev_a = a;
                prev_c = c;
            }
        }
        // At the optimal base period: applicability is non-increasing in t.
        double prev_a = 2.0;
        double prev_c = 101.0;
        for (double t : ts) {
            auto best = find_optimal(day, ConfidenceThreshold(t), grid);
            double a = best.report.applicability;
            double c = coverage_accuracy(best.segmentation, day).coverage_pct;
            if (a > prev_a + 1e-12) {
                o.fail("dataset " + std::to_string(i) + ": optimal applicability rises at t=" + std::to_string(t));
            }
            if (c > prev_c + 1e-9) {
                ++optimum_coverage_rises;
            }
            prev_a = a;
            prev_c = c;
        }
    }
    if (optimum_coverage_rises > 0) {
        // Known: the argmax base period moves with t, and a finer optimum can
        // cover more instances (e.g. REJECT at 68,72,152,965 and ACCEPT at 8,1043:
        // t=0.6 picks bp=120 at 66.7% coverage, t=0.9 picks bp=60 at 100%).
        o.fail("applicability monotone at every bp and at the optimum, coverage monotone at every fixed bp; "
               "coverage at the re-optimized bp rose in " + std::to_string(optimum_coverage_rises) + " of " +
               std::to_string(datasets * 6) + " threshold steps");
    }
    if (o.pass) {
        o.detail = std::to_string(datasets) + " datasets x 7 thresholds; applicability and coverage non-increasing";
    }
    return o;
}

GeneratorSpec planted_reject(std::uint64_t seed) {
    GeneratorSpec spec;
    spec.weeks = 20;
    spec.patterns = {{Weekday::Monday, {840, 930}, BehaviorLabel("REJECT"), 0.9, 1}};
    spec.background_per_day = 10;
    spec.seed = seed;
    return spec;
}

Outcome planted_recovery() {
    Outcome o;
    const auto start = Clock::now();
    MiningConfig config;
    config.threshold = ConfidenceThreshold(0.75);
    const int seeds = 10;
    int worst_gap = 0;
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        auto txs = generate(planted_reject(seed));
        auto result = mine(txs, config);
        const int bp = result.optima[0].optimal_base_period.minutes();
        bool found = false;
        for (const auto& rule : result.rules) {
            if (rule.weekday != Weekday::Monday || rule.behavior != BehaviorLabel("REJECT")) {
                continue;
            }
            int gap = std::max(std::abs(rule.interval.start - 840), std::abs(rule.interval.end - 930));
            if (gap <= bp) {
                found = true;
                worst_gap = std::max(worst_gap, gap);
            }
        }
        if (!found) {
            o.fail("seed " + std::to_string(seed) + ": no Monday Reject rule within BP_optimal=" +
                   std::to_string(bp));
        }
        auto week = split_by_weekday(txs);
        for (auto id : kAllBaselines) {
            auto bm = baseline_segmentation(id, week, config.threshold);
            if (bm.applicability > result.applicability + 1e-12) {
                o.fail("seed " + std::to_string(seed) + ": " + std::string(to_string(id)) + " applicability " +
                       std::to_string(bm.applicability) + " > BOTS " + std::to_string(result.applicability));
            }
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 5.0) {
        o.fail("took " + std::to_string(elapsed) + " s");
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%d seeds, worst boundary offset %d min, BOTS >= BM1..BM5, %.2f s", seeds,
                      worst_gap, elapsed);
        o.detail = buf;
    }
    return o;
}

Outcome day_wise_superiority() {
    Outcome o;
    GeneratorSpec spec;
    spec.weeks = 20;
    spec.background_per_day = 10;
    spec.seed = 11;
    spec.patterns.push_back({Weekday::Monday, {840, 930}, BehaviorLabel("REJECT"), 0.9, 3});
    for (Weekday day : kAllWeekdays) {
        if (day != Weekday::Monday) {
            spec.patterns.push_back({day, {840, 930}, BehaviorLabel("ACCEPT"), 0.9, 3});
        }
    }
    auto txs = generate(spec);
    MiningConfig config;
    auto day_wise = mine(txs, config);
    config.mode = Mode::WholeWeek;
    auto whole_week = mine(txs, config);
    if (!(day_wise.applicability > whole_week.applicability)) {
        o.fail("day-wise " + std::to_string(day_wise.applicability) + " <= whole-week " +
               std::to_string(whole_week.applicability));
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "day-wise %.6f > whole-week %.6f", day_wise.applicability,
                      whole_week.applicability);
        o.detail = buf;
    }
    return o;
}

Outcome performance() {
    Outcome o;
    GeneratorSpec spec;
    spec.weeks = 50;
    spec.background_per_day = 140;
    spec.seed = 3;
    spec.patterns = {{Weekday::Monday, {840, 930}, BehaviorLabel("REJECT"), 0.9, 20},
                     {Weekday::Saturday, {1140, 1200}, BehaviorLabel("MISSED"), 0.85, 20}};
    auto txs = generate(spec);
    const auto start = Clock::now();
    auto result = mine(txs, MiningConfig{});
    const double elapsed = seconds_since(start);
    if (txs.size() < 50000) {
        o.fail("only " + std::to_string(txs.size()) + " instances");
    }
    if (result.optima.size() != 7) {
        o.fail("expected 7 weekday optima");
    }
    if (elapsed >= 10.0) {
        o.fail("took " + std::to_string(elapsed) + " s");
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%zu instances, grid 5..240, 7 weekdays in %.2f s", txs.size(), elapsed);
        o.detail = buf;
    }
    return o;
}

Outcome cross_validation() {
    Outcome o;
    // A user whose every weekday is split into four equal blocks, one label
    // each. Off-pattern events go uniformly to the other three labels, so each
    // class loses exactly (1 - adherence) of its instances: expected recall 0.9.
    const double adherence = 0.9;
    const auto universe = call_label_universe();
    GeneratorSpec spec;
    spec.weeks = 20;
    spec.seed = 21;
    for (Weekday day : kAllWeekdays) {
        for (int b = 0; b < 4; ++b) {
            spec.patterns.push_back({day, {b * 360, (b + 1) * 360}, universe[static_cast<std::size_t>(b)],
                                     adherence, 6});
        }
    }
    auto txs = generate(spec);
    MiningConfig config;
    auto first = cross_validate(txs, config, 10, 42);
    auto second = cross_validate(txs, config, 10, 42);
    if (first.folds.size() != 10 || second.folds.size() != 10) {
        o.fail("expected 10 folds");
    }
    for (std::size_t f = 0; f < first.folds.size() && f < second.folds.size(); ++f) {
        if (first.folds[f].scores.precision != second.folds[f].scores.precision ||
            first.folds[f].scores.recall != second.folds[f].scores.recall) {
            o.fail("fold " + std::to_string(f) + " differs between runs");
        }
    }
    if (std::abs(first.mean_recall - adherence) > 0.1) {
        o.fail("mean recall " + std::to_string(first.mean_recall) + " not within 0.1 of " + std::to_string(adherence));
    }
    if (o.pass) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "10 folds identical across runs; mean recall %.4f (expected %.2f +- 0.1)",
                      first.mean_recall, adherence);
        o.detail = buf;
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {"slice-count identity", slice_counts},
        {"dominance fixtures", dominance_fixtures},
        {"applicability bounds and oracle", applicability_oracle},
        {"training accuracy floor", training_accuracy_floor},
        {"threshold monotonicity", threshold_monotonicity},
        {"planted-pattern recovery", planted_recovery},
        {"day-wise superiority", day_wise_superiority},
        {"performance", performance},
        {"cross-validation determinism and recall", cross_validation},
    };
    int failures = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome out;
        try {
            out = c.check();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %d. %s: %s\n", out.pass ? "PASS" : "FAIL", index, c.name, out.detail.c_str());
        std::fflush(stdout);
        failures += out.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
