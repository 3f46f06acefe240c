#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "bots/evaluation.hpp"
#include "bots/synth.hpp"

namespace bots {

using nlohmann::json;

json to_json(const Segment& seg);
/// {weekday, base_period, threshold, segments:[{start,end,dominant,ratio,support,counts}]}
json to_json(const Segmentation& seg);
json to_json(const ApplicabilityReport& report);
/// Segmentation and report of the optimum plus the full sweep.
json to_json(const OptimalResult& opt);
json to_json(const TemporalRule& rule);
json to_json(std::span<const TemporalRule> rules);
json to_json(const CoverageAccuracy& ca);
json to_json(const PrecisionRecall& pr);
json to_json(const CrossValidationReport& report);
json to_json(const PlantedPattern& p);
json to_json(const GeneratorSpec& spec);

/// Accepts the `rules` array of a rules.json document, or the document itself.
std::vector<TemporalRule> rules_from_json(const json& doc);
GeneratorSpec generator_spec_from_json(const json& doc);

/// `bp,applicability` with a header row.
void write_sweep_csv(std::ostream& out, const OptimalResult& opt);

}  // namespace bots
