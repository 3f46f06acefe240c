#include "bots/serialize.hpp"

#include <ostream>

namespace bots {

namespace {

json label_or_null(const std::optional<BehaviorLabel>& label) {
    return label ? json(label->name()) : json(nullptr);
}

Weekday weekday_from(const json& j) {
    auto day = parse_weekday(j.get<std::string>());
    if (!day) {
        throw Error("unknown weekday '" + j.get<std::string>() + "'");
    }
    return *day;
}

}  // namespace

json to_json(const Segment& seg) {
    json counts = json::object();
    for (const auto& [label, n] : seg.counts.entries()) {
        counts[label.name()] = n;
    }
    return {{"start", seg.interval.start},
            {"end", seg.interval.end},
            {"dominant", label_or_null(seg.dominance.dominant)},
            {"ratio", seg.dominance.ratio},
            {"support", seg.support()},
            {"counts", counts}};
}

json to_json(const Segmentation& seg) {
    json segments = json::array();
    for (const auto& s : seg.segments) {
        segments.push_back(to_json(s));
    }
    return {{"weekday", to_string(seg.weekday)},
            {"base_period", seg.base_period.minutes()},
            {"threshold", seg.threshold.value()},
            {"segments", segments}};
}

json to_json(const ApplicabilityReport& report) {
    json terms = json::array();
    for (const auto& t : report.terms) {
        terms.push_back({{"start", t.interval.start},
                         {"end", t.interval.end},
                         {"support", t.support},
                         {"coverage_minutes", t.coverage_minutes},
                         {"value", t.value}});
    }
    return {{"base_period", report.base_period.minutes()},
            {"applicability", report.applicability},
            {"s_max", report.s_max},
            {"c_max", report.c_max},
            {"terms", terms}};
}

json to_json(const OptimalResult& opt) {
    json sweep = json::array();
    for (const auto& p : opt.sweep) {
        sweep.push_back({{"bp", p.base_period.minutes()}, {"applicability", p.applicability}});
    }
    return {{"weekday", to_string(opt.weekday)},
            {"optimal_base_period", opt.optimal_base_period.minutes()},
            {"segmentation", to_json(opt.segmentation)},
            {"report", to_json(opt.report)},
            {"sweep", sweep}};
}

json to_json(const TemporalRule& rule) {
    return {{"weekday", to_string(rule.weekday)},
            {"start", rule.interval.start},
            {"end", rule.interval.end},
            {"segment", format_interval(rule.interval)},
            {"behavior", rule.behavior.name()},
            {"confidence", rule.confidence},
            {"support_count", rule.support_count},
            {"matched_count", rule.matched_count},
            {"dataset_size", rule.dataset_size},
            {"temporal_coverage_min", rule.temporal_coverage_minutes()}};
}

json to_json(std::span<const TemporalRule> rules) {
    json out = json::array();
    for (const auto& r : rules) {
        out.push_back(to_json(r));
    }
    return out;
}

json to_json(const CoverageAccuracy& ca) {
    return {{"dataset_size", ca.dataset_size},
            {"n_covers", ca.n_covers},
            {"n_correct", ca.n_correct},
            {"coverage_pct", ca.coverage_pct},
            {"accuracy_pct", ca.accuracy_pct},
            {"accuracy_defined", ca.accuracy_defined}};
}

json to_json(const PrecisionRecall& pr) {
    json classes = json::object();
    for (const auto& [label, c] : pr.per_class) {
        classes[label.name()] = {{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}};
    }
    return {{"precision", pr.precision},
            {"recall", pr.recall},
            {"precision_defined", pr.precision_defined},
            {"per_class", classes}};
}

json to_json(const CrossValidationReport& report) {
    json folds = json::array();
    for (const auto& f : report.folds) {
        folds.push_back({{"fold", f.fold},
                         {"train_size", f.train_size},
                         {"test_size", f.test_size},
                         {"precision", f.scores.precision},
                         {"recall", f.scores.recall},
                         {"precision_defined", f.scores.precision_defined},
                         {"coverage", to_json(f.coverage)}});
    }
    return {{"k", report.k},
            {"seed", report.seed},
            {"mean_precision", report.mean_precision},
            {"mean_recall", report.mean_recall},
            {"mean_coverage_pct", report.mean_coverage_pct},
            {"precision_defined", report.precision_defined},
            {"folds", folds}};
}

json to_json(const PlantedPattern& p) {
    return {{"weekday", to_string(p.weekday)},
            {"start", p.interval.start},
            {"end", p.interval.end},
            {"behavior", p.behavior.name()},
            {"adherence", p.adherence},
            {"events_per_week", p.events_per_week}};
}

json to_json(const GeneratorSpec& spec) {
    json patterns = json::array();
    for (const auto& p : spec.patterns) {
        patterns.push_back(to_json(p));
    }
    json universe = json::array();
    for (const auto& l : spec.universe) {
        universe.push_back(l.name());
    }
    return {{"weeks", spec.weeks},
            {"start", format_timestamp(spec.start, "%Y-%m-%d")},
            {"universe", universe},
            {"patterns", patterns},
            {"background_per_day", spec.background_per_day},
            {"seed", spec.seed}};
}

std::vector<TemporalRule> rules_from_json(const json& doc) {
    const json& arr = doc.is_object() ? doc.at("rules") : doc;
    std::vector<TemporalRule> rules;
    try {
        for (const auto& j : arr) {
            TemporalRule r;
            r.weekday = weekday_from(j.at("weekday"));
            r.interval = {j.at("start").get<int>(), j.at("end").get<int>()};
            r.behavior = BehaviorLabel(j.at("behavior").get<std::string>());
            r.confidence = j.at("confidence").get<double>();
            r.support_count = j.at("support_count").get<std::int64_t>();
            r.matched_count = j.value("matched_count", std::int64_t{0});
            r.dataset_size = j.value("dataset_size", std::int64_t{0});
            if (r.interval.start < 0 || r.interval.end > kMinutesPerDay || r.interval.length() <= 0) {
                throw Error("rule interval out of range: " + format_interval(r.interval));
            }
            rules.push_back(std::move(r));
        }
    } catch (const json::exception& e) {
        throw Error(std::string("malformed rules document: ") + e.what());
    }
    check_non_overlapping(rules);
    return rules;
}

GeneratorSpec generator_spec_from_json(const json& doc) {
    GeneratorSpec spec;
    try {
        spec.weeks = doc.value("weeks", spec.weeks);
        if (doc.contains("start")) {
            auto start = parse_timestamp(doc.at("start").get<std::string>(), "%Y-%m-%d");
            if (!start) {
                throw Error("generator start must be YYYY-MM-DD");
            }
            spec.start = *start;
        }
        if (doc.contains("universe")) {
            spec.universe.clear();
            for (const auto& l : doc.at("universe")) {
                spec.universe.emplace_back(l.get<std::string>());
            }
        }
        for (const auto& j : doc.value("patterns", json::array())) {
            PlantedPattern p;
            p.weekday = weekday_from(j.at("weekday"));
            p.interval = {j.at("start").get<int>(), j.at("end").get<int>()};
            p.behavior = BehaviorLabel(j.at("behavior").get<std::string>());
            p.adherence = j.value("adherence", 1.0);
            p.events_per_week = j.value("events_per_week", 1);
            spec.patterns.push_back(std::move(p));
        }
        spec.background_per_day = doc.value("background_per_day", 0);
        spec.seed = doc.value("seed", spec.seed);
    } catch (const json::exception& e) {
        throw Error(std::string("malformed generator spec: ") + e.what());
    }
    validate(spec);
    return spec;
}

void write_sweep_csv(std::ostream& out, const OptimalResult& opt) {
    out << "bp,applicability\n";
    const auto old_precision = out.precision(17);
    for (const auto& p : opt.sweep) {
        out << p.base_period.minutes() << ',' << p.applicability << '\n';
    }
    out.precision(old_precision);
}

}  // namespace bots
