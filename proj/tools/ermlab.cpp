// Batch interface: config-driven experiment runs, canned scenarios, plots,
// and the two bound/dimension calculators.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli/config.hpp"
#include "cli/csv.hpp"
#include "cli/fact_suite.hpp"
#include "cli/runner.hpp"
#include "cli/scenarios.hpp"
#include "cli/svg_plot.hpp"
#include "ermlab/capacity.hpp"
#include "ermlab/errors.hpp"

namespace {

using namespace ermlab;
using namespace ermlab::cli;

void apply_enum_cap_env() {
    const char* raw = std::getenv("ERMLAB_MAX_ENUM");
    if (raw == nullptr) return;
    try {
        const std::string text = raw;
        std::size_t used = 0;
        const unsigned long long cap = std::stoull(text, &used);
        // stoull tolerates a leading '-' by wrapping; reject it explicitly.
        if (used != text.size() || cap == 0 || text.find('-') != std::string::npos)
            throw std::invalid_argument("not a positive integer");
        set_enumeration_cap(cap);
    } catch (const std::exception&) {
        throw ConfigError("ERMLAB_MAX_ENUM", std::string("not a positive integer: '") + raw + "'");
    }
}

int run_scenario_command(const std::string& raw_name, const std::string& out_dir) {
    std::string name = raw_name;
    for (char& c : name)
        if (c == '-') c = '_';

    if (name == "fact_suite") {
        const auto checks = run_fact_suite();
        const std::string table = format_fact_table(checks);
        std::cout << table;
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            write_text_file((std::filesystem::path(out_dir) / "facts.txt").string(), table);
        }
        for (const auto& c : checks)
            if (!c.pass) return 1;
        return 0;
    }

    const ScenarioResult result = run_scenario(name);
    std::cout << "case: " << to_string(result.classified) << "\n";
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_text_file((std::filesystem::path(out_dir) / "report.json").string(),
                        result.report_json.dump(2) + "\n");
        write_text_file((std::filesystem::path(out_dir) / "samples.csv").string(), result.samples_csv);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ermlab: exact and approximate ERM over finite boolean hypothesis classes"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::string run_out;
    CLI::App* run = app.add_subcommand("run", "execute a JSON experiment config and write its artifacts");
    run->add_option("config", config_path, "path to the config file")->required();
    run->add_option("-o,--out", run_out, "output directory (default: <config stem>.out)");

    std::string csv_path, plot_kind_name, plot_out;
    bool linear = false, force_log = false;
    CLI::App* plot = app.add_subcommand("plot", "render a CSV table as a deterministic SVG");
    plot->add_option("csv", csv_path, "input CSV file")->required();
    plot->add_option("-k,--kind", plot_kind_name, "risk-vs-m, scaling or gap-histogram")->required();
    plot->add_option("-o,--out", plot_out, "output SVG path")->required();
    plot->add_flag("--linear", linear, "linear y axis (scaling plots default to log)");
    plot->add_flag("--log-y", force_log, "log-scale y axis");

    std::string scenario_name;
    std::string scenario_out;
    CLI::App* scenario = app.add_subcommand("scenario", "run a canned, seed-frozen experiment");
    scenario
        ->add_option("name", scenario_name,
                     "tradeoff, no-tradeoff, interpretability-wins or fact-suite")
        ->required();
    scenario->add_option("-o,--out", scenario_out, "also write report.json and samples.csv here");

    int bound_d = 0;
    std::uint64_t bound_m = 0;
    double bound_delta = 0.05, bound_constant = 2.0;
    std::string bound_mode = "paper";
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate a generalization bound");
    bounds->add_option("--d", bound_d, "VC dimension")->required();
    bounds->add_option("--m", bound_m, "sample size")->required();
    bounds->add_option("--delta", bound_delta, "confidence parameter in (0,1)")->required();
    bounds->add_option("--mode", bound_mode, "paper, classical or fast_rate");
    bounds->add_option("--constant", bound_constant, "leading constant for paper mode (default 2)");

    std::string vc_family = "conjunction", vc_predicate;
    int vc_n = 2, vc_depth = 2, vc_max_set = 6;
    std::uint64_t vc_max_subsets = 10'000'000;
    CLI::App* vc = app.add_subcommand("vc", "brute-force VC dimension of a class");
    vc->add_option("--family", vc_family, "constant, conjunction, three_term_dnf or decision_tree");
    vc->add_option("--n", vc_n, "number of variables")->required();
    vc->add_option("--depth", vc_depth, "depth budget (decision trees only, default 2)");
    vc->add_option("--predicate", vc_predicate, "restriction, e.g. max_literals=1");
    vc->add_option("--max-set-size", vc_max_set, "largest point-set size searched");
    vc->add_option("--max-subsets", vc_max_subsets, "subset search budget");

    try {
        app.parse(argc, argv);
        apply_enum_cap_env();

        if (*run) {
            if (run_out.empty()) {
                std::filesystem::path p(config_path);
                run_out = (p.parent_path() / p.stem()).string() + ".out";
            }
            const Json manifest = run_config_file(config_path, run_out);
            std::cout << "wrote " << manifest["artifacts"].size() << " artifacts to " << run_out << "\n";
            return 0;
        }
        if (*plot) {
            const auto kind = plot_kind_from_string(plot_kind_name);
            if (!kind) throw ConfigError("kind", "unknown plot kind '" + plot_kind_name + "'");
            const bool log_y = force_log || (*kind == PlotKind::Scaling && !linear);
            write_text_file(plot_out, render_svg_plot(read_csv_file(csv_path), *kind, log_y));
            return 0;
        }
        if (*scenario) return run_scenario_command(scenario_name, scenario_out);
        if (*bounds) {
            if (bound_m == 0) throw ConfigError("m", "sample size must be positive");
            const Json config{{"experiment", "bounds"}, {"d", bound_d},       {"m", bound_m},
                              {"delta", bound_delta},   {"mode", bound_mode}, {"constant", bound_constant}};
            const ArtifactMap artifacts = execute_config(config);
            const Json report = Json::parse(artifacts.at("report.json"));
            std::cout << format_double(report["value"].get<double>()) << "\n";
            return 0;
        }
        if (*vc) {
            const auto family = family_from_string(vc_family);
            if (!family) throw ConfigError("family", "unknown family '" + vc_family + "'");
            HypothesisClass cls = [&] {
                switch (*family) {
                case Family::Constant: return HypothesisClass::constants(vc_n);
                case Family::Conjunction: return HypothesisClass::conjunctions(vc_n);
                case Family::ThreeTermDnf: return HypothesisClass::three_term_dnfs(vc_n);
                default: return HypothesisClass::decision_trees(vc_n, vc_depth);
                }
            }();
            if (!vc_predicate.empty()) cls = cls.restricted(predicate_from_spec(vc_predicate));
            const VcResult result =
                vc_dimension(cls, DomainSpec(vc_n), VcSearchLimits{vc_max_set, vc_max_subsets});
            std::cout << result.dimension << (result.exact ? "" : " (lower bound)") << "\n";
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
