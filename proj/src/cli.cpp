#include "bots/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bots/serialize.hpp"

namespace bots::cli {

namespace fs = std::filesystem;

namespace {

struct InputOptions {
    std::string input;
    LogFormatSpec format;
    std::vector<std::string> raw_types;
};

struct MiningOptions {
    double threshold = 0.75;
    std::int64_t min_support = 1;
    int bp_start = 5;
    int bp_step = 5;
    int bp_max = 240;
    std::string mode = "day-wise";

    MiningConfig config() const {
        MiningConfig c;
        c.threshold = ConfidenceThreshold(threshold);
        c.grid = make_grid(bp_start, bp_step, bp_max);
        if (min_support < 1) {
            throw Error("--min-support must be at least 1");
        }
        c.min_support = min_support;
        auto m = parse_mode(mode);
        if (!m) {
            throw Error("--mode must be day-wise or whole-week");
        }
        c.mode = *m;
        return c;
    }
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
    cmd.add_option("-i,--input", in.input, "Call log CSV")->required();
    cmd.add_option("--ts-format", in.format.timestamp_format, "Timestamp pattern (%Y %m %d %H %M %S)")
        ->capture_default_str();
    cmd.add_option("--col-timestamp", in.format.col_timestamp, "Timestamp column")->capture_default_str();
    cmd.add_option("--col-type", in.format.col_type, "Event type column")->capture_default_str();
    cmd.add_option("--col-duration", in.format.col_duration, "Duration column (seconds)")->capture_default_str();
    cmd.add_option("--col-id", in.format.col_id, "Record id column")->capture_default_str();
    cmd.add_option("--raw-types", in.raw_types, "Permitted event types (default INCOMING MISSED OUTGOING)")
        ->delimiter(',');
}

void add_mining_options(CLI::App& cmd, MiningOptions& m, bool with_threshold = true) {
    if (with_threshold) {
        cmd.add_option("-t,--threshold", m.threshold, "Confidence threshold in (0.5, 1]")->capture_default_str();
    }
    cmd.add_option("--min-support", m.min_support, "Minimum rule support count")->capture_default_str();
    cmd.add_option("--bp-start", m.bp_start, "First base period (minutes)")->capture_default_str();
    cmd.add_option("--bp-step", m.bp_step, "Base period increment (minutes)")->capture_default_str();
    cmd.add_option("--bp-max", m.bp_max, "Largest base period (minutes)")->capture_default_str();
    cmd.add_option("--mode", m.mode, "day-wise or whole-week")->capture_default_str();
}

std::vector<BehavioralTransaction> load(const InputOptions& in) {
    std::ifstream file(in.input);
    if (!file) {
        throw Error("cannot open input '" + in.input + "'");
    }
    LogFormatSpec format = in.format;
    if (!in.raw_types.empty()) {
        format.raw_types = in.raw_types;
    }
    auto transactions = parse_log(file, format);
    if (transactions.empty()) {
        throw Error("no transactions in '" + in.input + "'");
    }
    return transactions;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error("cannot write '" + path.string() + "'");
    }
    file << content;
}

void emit(std::ostream& out, const std::string& output_path, const std::string& content) {
    if (output_path.empty()) {
        out << content;
    } else {
        write_file(output_path, content);
    }
}

std::vector<double> parse_thresholds(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            ConfidenceThreshold check(v);
            values.push_back(v);
        } catch (const std::logic_error&) {
            throw Error("invalid threshold '" + item + "'");
        }
    }
    if (values.empty()) {
        throw Error("--thresholds must list at least one value");
    }
    return values;
}

std::string format_number(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

PlantedPattern parse_plant(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        parts.push_back(item);
    }
    if (parts.size() < 5 || parts.size() > 6) {
        throw Error("--plant expects weekday,start,end,behavior,adherence[,events_per_week], got '" + text + "'");
    }
    auto day = parse_weekday(parts[0]);
    if (!day) {
        throw Error("unknown weekday '" + parts[0] + "'");
    }
    try {
        PlantedPattern p;
        p.weekday = *day;
        p.interval = {std::stoi(parts[1]), std::stoi(parts[2])};
        p.behavior = BehaviorLabel(parts[3]);
        p.adherence = std::stod(parts[4]);
        if (parts.size() == 6) {
            p.events_per_week = std::stoi(parts[5]);
        }
        return p;
    } catch (const std::logic_error&) {
        throw Error("malformed --plant '" + text + "'");
    }
}

std::optional<std::uint64_t> env_seed() {
    const char* value = std::getenv("BOTS_SEED");
    if (!value || !*value) {
        return std::nullopt;
    }
    try {
        return std::stoull(value);
    } catch (const std::logic_error&) {
        throw Error(std::string("BOTS_SEED is not an unsigned integer: '") + value + "'");
    }
}

json evaluation_json(std::span<const TemporalRule> rules, std::span<const BehavioralTransaction> transactions) {
    auto week = split_by_weekday(transactions);
    RulePredictor predictor(rules);
    std::vector<Prediction> predictions;
    predictions.reserve(transactions.size());
    for (const auto& tx : transactions) {
        predictions.emplace_back(predictor.predict(tx.timestamp.weekday(), tx.timestamp.minute_of_day()),
                                 tx.label);
    }
    return {{"coverage", to_json(coverage_accuracy(rules, week))},
            {"prediction", to_json(precision_recall(predictions))}};
}

// ---------------------------------------------------------------------------

void cmd_mine(const InputOptions& in, const MiningOptions& m, const std::string& out_dir, std::ostream& out) {
    auto transactions = load(in);
    MiningConfig config = m.config();
    WeekResult result = mine(transactions, config);

    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    json rules_doc = {{"mode", to_string(result.mode)},
                      {"threshold", config.threshold.value()},
                      {"min_support", config.min_support},
                      {"log_size", result.log_size},
                      {"applicability", result.applicability},
                      {"rules", to_json(result.rules)},
                      {"training", evaluation_json(result.rules, transactions)}};
    write_file(dir / "rules.json", rules_doc.dump(2) + "\n");
    write_file(dir / "rules.txt", render_rules_table(result.rules));

    json segments = json::array();
    for (const auto& opt : result.optima) {
        segments.push_back(to_json(opt));
        std::ostringstream sweep;
        write_sweep_csv(sweep, opt);
        const std::string name = result.mode == Mode::DayWise ? std::string(to_string(opt.weekday)) : "week";
        write_file(dir / ("sweep_" + name + ".csv"), sweep.str());
    }
    json seg_doc = {{"mode", to_string(result.mode)}, {"days", segments}};
    write_file(dir / "segments.json", seg_doc.dump(2) + "\n");

    out << "mined " << result.rules.size() << " rules from " << result.log_size << " transactions ("
        << to_string(result.mode) << ", t=" << config.threshold.value()
        << ", applicability=" << format_number(result.applicability) << ")\n";
    for (const auto& opt : result.optima) {
        out << "  " << (result.mode == Mode::DayWise ? to_string(opt.weekday) : std::string_view("week"))
            << ": BP_optimal=" << opt.optimal_base_period.minutes()
            << " applicability=" << format_number(opt.report.applicability) << '\n';
    }
}

void cmd_segment(const InputOptions& in, const MiningOptions& m, std::optional<int> bp,
                 const std::string& output, std::ostream& out) {
    auto transactions = load(in);
    MiningConfig config = m.config();
    if (bp) {
        config.grid = {BasePeriod(*bp)};
    }
    WeekResult result = mine(transactions, config);
    json days = json::array();
    for (const auto& opt : result.optima) {
        json day = to_json(opt.segmentation);
        day["applicability"] = opt.report.applicability;
        days.push_back(day);
    }
    json doc = {{"mode", to_string(result.mode)}, {"days", days}};
    emit(out, output, doc.dump(2) + "\n");
}

void cmd_evaluate(const InputOptions& in, const std::string& rules_path, const std::string& output,
                  std::ostream& out) {
    std::ifstream file(rules_path);
    if (!file) {
        throw Error("cannot open rules '" + rules_path + "'");
    }
    json doc;
    try {
        doc = json::parse(file);
    } catch (const json::exception& e) {
        throw Error("rules file is not valid JSON: " + std::string(e.what()));
    }
    auto rules = rules_from_json(doc);
    auto transactions = load(in);
    emit(out, output, evaluation_json(rules, transactions).dump(2) + "\n");
}

void cmd_compare(const InputOptions& in, const MiningOptions& m, const std::string& thresholds_text,
                 const std::vector<std::string>& methods, const std::string& output, std::ostream& out) {
    auto thresholds = parse_thresholds(thresholds_text);
    std::vector<std::string> chosen = methods;
    if (chosen.empty()) {
        chosen = {"BOTS", "BM1", "BM2", "BM3", "BM4", "BM5"};
    }
    for (const auto& name : chosen) {
        if (name != "BOTS" && !parse_baseline(name)) {
            throw Error("unknown method '" + name + "' (expected BOTS, BM1..BM5)");
        }
    }

    auto transactions = load(in);
    auto week = split_by_weekday(transactions);
    std::ostringstream csv;
    csv << "threshold,method,applicability,coverage_pct,accuracy_pct\n";
    for (double t : thresholds) {
        MiningOptions opts = m;
        opts.threshold = t;
        MiningConfig config = opts.config();
        for (const auto& name : chosen) {
            double applicability = 0.0;
            CoverageAccuracy ca;
            if (name == "BOTS") {
                WeekResult result = mine(transactions, config);
                applicability = result.applicability;
                ca = coverage_accuracy(result.rules, week);
            } else {
                auto result = baseline_segmentation(*parse_baseline(name), week, config.threshold, config.min_support);
                applicability = result.applicability;
                ca = result.coverage;
            }
            csv << format_number(t) << ',' << name << ',' << format_number(applicability) << ','
                << format_number(ca.coverage_pct) << ',' << format_number(ca.accuracy_pct) << '\n';
        }
    }
    emit(out, output, csv.str());
}

void cmd_cross_validate(const InputOptions& in, const MiningOptions& m, std::size_t folds, std::uint64_t seed,
                        const std::string& output, std::ostream& out) {
    auto transactions = load(in);
    auto report = cross_validate(transactions, m.config(), folds, seed);
    emit(out, output, to_json(report).dump(2) + "\n");
}

void cmd_synth(const std::string& spec_path, const std::vector<std::string>& plants, std::optional<int> weeks,
               std::optional<int> background, const std::string& start, std::optional<std::uint64_t> seed,
               const std::string& output, std::string truth_path, std::ostream& out) {
    GeneratorSpec spec;
    if (!spec_path.empty()) {
        std::ifstream file(spec_path);
        if (!file) {
            throw Error("cannot open generator spec '" + spec_path + "'");
        }
        try {
            spec = generator_spec_from_json(json::parse(file));
        } catch (const json::parse_error& e) {
            throw Error("generator spec is not valid JSON: " + std::string(e.what()));
        }
    }
    for (const auto& p : plants) {
        spec.patterns.push_back(parse_plant(p));
    }
    if (weeks) {
        spec.weeks = *weeks;
    }
    if (background) {
        spec.background_per_day = *background;
    }
    if (!start.empty()) {
        auto date = parse_timestamp(start, "%Y-%m-%d");
        if (!date) {
            throw Error("--start must be YYYY-MM-DD");
        }
        spec.start = *date;
    }
    if (seed) {
        spec.seed = *seed;
    }

    auto transactions = generate(spec);
    std::ostringstream csv;
    write_log_csv(csv, transactions);
    write_file(output, csv.str());
    if (truth_path.empty()) {
        truth_path = output + ".truth.json";
    }
    write_file(truth_path, to_json(spec).dump(2) + "\n");
    out << "wrote " << transactions.size() << " transactions to " << output << " (truth: " << truth_path
        << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Behavior-oriented time segmentation: mine weekly temporal behavior rules from event logs", "bots"};
    app.require_subcommand(1);

    InputOptions in;
    MiningOptions m;
    std::optional<std::uint64_t> seed_flag;
    std::string out_dir = ".";
    std::string output;

    auto* mine_cmd = app.add_subcommand("mine", "Find optimal segmentations and emit temporal rules");
    add_input_options(*mine_cmd, in);
    add_mining_options(*mine_cmd, m);
    mine_cmd->add_option("-o,--out", out_dir, "Output directory")->capture_default_str();

    std::optional<int> fixed_bp;
    auto* segment_cmd = app.add_subcommand("segment", "Print segmentations (optimal, or for a fixed --bp)");
    add_input_options(*segment_cmd, in);
    add_mining_options(*segment_cmd, m);
    segment_cmd->add_option("--bp", fixed_bp, "Use this base period instead of searching the grid");
    segment_cmd->add_option("--output", output, "Write JSON here instead of stdout");

    std::string rules_path;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a rules.json against a log");
    add_input_options(*evaluate_cmd, in);
    evaluate_cmd->add_option("-r,--rules", rules_path, "rules.json from `mine`")->required();
    evaluate_cmd->add_option("--output", output, "Write JSON here instead of stdout");

    std::string thresholds = "0.51,0.6,0.7,0.8,0.9,1.0";
    std::vector<std::string> methods;
    auto* compare_cmd = app.add_subcommand("compare", "Compare against static baseline segmentations");
    add_input_options(*compare_cmd, in);
    add_mining_options(*compare_cmd, m, false);
    compare_cmd->add_option("--thresholds", thresholds, "Comma-separated confidence thresholds")
        ->capture_default_str();
    compare_cmd->add_option("--methods", methods, "Subset of BOTS,BM1,BM2,BM3,BM4,BM5")->delimiter(',');
    compare_cmd->add_option("--output", output, "Write CSV here instead of stdout");

    std::size_t folds = 10;
    auto* cv_cmd = app.add_subcommand("cross-validate", "k-fold precision/recall of mined rules");
    add_input_options(*cv_cmd, in);
    add_mining_options(*cv_cmd, m);
    cv_cmd->add_option("-k,--folds", folds, "Number of folds")->capture_default_str();
    cv_cmd->add_option("--seed", seed_flag, "Shuffle seed (default: $BOTS_SEED, else 42)");
    cv_cmd->add_option("--output", output, "Write JSON here instead of stdout");

    std::string spec_path;
    std::vector<std::string> plants;
    std::optional<int> weeks;
    std::optional<int> background;
    std::string start;
    std::string truth_path;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic call log with planted weekly habits");
    synth_cmd->add_option("--spec", spec_path, "Generator spec JSON");
    synth_cmd->add_option("--plant", plants, "weekday,start,end,behavior,adherence[,events_per_week]")
        ->take_all();
    synth_cmd->add_option("--weeks", weeks, "Number of weeks");
    synth_cmd->add_option("--background", background, "Background events per day");
    synth_cmd->add_option("--start", start, "First date, YYYY-MM-DD");
    synth_cmd->add_option("--seed", seed_flag, "Generator seed (default: $BOTS_SEED, else spec/1)");
    synth_cmd->add_option("-o,--output", output, "CSV path")->required();
    synth_cmd->add_option("--truth", truth_path, "Ground-truth JSON path (default <output>.truth.json)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        auto seed = seed_flag ? seed_flag : env_seed();
        if (mine_cmd->parsed()) {
            cmd_mine(in, m, out_dir, out);
        } else if (segment_cmd->parsed()) {
            cmd_segment(in, m, fixed_bp, output, out);
        } else if (evaluate_cmd->parsed()) {
            cmd_evaluate(in, rules_path, output, out);
        } else if (compare_cmd->parsed()) {
            cmd_compare(in, m, thresholds, methods, output, out);
        } else if (cv_cmd->parsed()) {
            cmd_cross_validate(in, m, folds, seed.value_or(42), output, out);
        } else if (synth_cmd->parsed()) {
            cmd_synth(spec_path, plants, weeks, background, start, seed, output, truth_path, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace bots::cli
