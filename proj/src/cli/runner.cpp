#include "cli/runner.hpp"

#include <chrono>
#include <filesystem>
#include <sstream>

#include "cli/csv.hpp"
#include "ermlab/capacity.hpp"
#include "ermlab/decomposition.hpp"
#include "ermlab/dnf3.hpp"
#include "ermlab/errors.hpp"

namespace ermlab::cli {

namespace {

Seed seed_from(const Json& config) {
    if (!config.contains("seed")) return Seed{0};
    return Seed{config_u64(config, "seed")};
}

HypothesisClass restricted_from(const Json& config, const HypothesisClass& full) {
    if (!config.contains("restriction")) return full;
    const Json& r = config["restriction"];
    if (r.is_string()) return full.restricted(predicate_from_spec(r.get<std::string>()));
    try {
        return full.restricted(predicate_from_json(r));
    } catch (const std::invalid_argument& e) {
        throw ConfigError("restriction", e.what());
    }
}

ArtifactMap run_tradeoff(const Json& config) {
    const HypothesisClass full = class_from_config(config, "class");
    const HypothesisClass restricted = restricted_from(config, full);
    const FiniteDistribution dist = distribution_from_config(config);
    const std::size_t m = config_u64(config, "m");
    if (m == 0) throw ConfigError("m", "sample size must be positive");
    const int trials = config_int(config, "trials", 2, 1'000'000);
    const double tol =
        config.contains("tol") ? config_double(config, "tol", 0.0, 1.0, true, true) : 0.01;
    const LearnerMode mode = learner_from_config(config);

    const TradeoffReport report = tradeoff_experiment(full, restricted, dist, m, trials, seed_from(config), mode);
    const TradeoffCase classified = classify_case(report, tol);

    Json out{
        {"experiment", "tradeoff"},
        {"case", to_string(classified)},
        {"tol", tol},
        {"seed", seed_from(config).value},
        {"class", class_descriptor_json(full)},
        {"restricted_class", class_descriptor_json(restricted)},
        {"distribution", to_json(dist)},
        {"report", to_json(report)},
    };
    return {{"report.json", out.dump(2) + "\n"}, {"samples.csv", tradeoff_samples_csv(report)}};
}

ArtifactMap run_decompose(const Json& config) {
    const HypothesisClass cls = class_from_config(config, "class");
    const FiniteDistribution dist = distribution_from_config(config);
    const std::size_t m = config_u64(config, "m");
    if (m == 0) throw ConfigError("m", "sample size must be positive");
    const int trials = config.contains("trials") ? config_int(config, "trials", 1, 1'000'000) : 1;
    const Seed seed = seed_from(config);
    const Learner learner = make_learner(learner_from_config(config));

    Json rows = Json::array();
    std::ostringstream csv;
    csv << "trial,total_risk,approx_error,estimation_error,erm_empirical_risk,optimization_error,"
           "generalization_error\n";
    for (int t = 0; t < trials; ++t) {
        const Seed trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
        const Dataset data = draw_dataset(dist, m, trial_seed);
        const Hypothesis h = learner.run(cls, data, derive_seed(trial_seed, 1));
        const RiskDecomposition dec = decompose(h, cls, data, dist);
        rows.push_back(to_json(dec));
        csv << t << ',' << format_double(dec.total_risk) << ',' << format_double(dec.approx_error) << ','
            << format_double(dec.estimation_error) << ',' << format_double(dec.erm_empirical_risk) << ','
            << format_double(dec.optimization_error) << ',' << format_double(dec.generalization_error) << '\n';
    }

    Json out{
        {"experiment", "decompose"},
        {"learner", learner.name},
        {"seed", seed.value},
        {"m", m},
        {"trials", trials},
        {"class", class_descriptor_json(cls)},
        {"distribution", to_json(dist)},
        {"rows", rows},
    };
    return {{"report.json", out.dump(2) + "\n"}, {"samples.csv", csv.str()}};
}

ArtifactMap run_vc(const Json& config) {
    const HypothesisClass cls = class_from_config(config, "class");
    VcSearchLimits limits;
    if (config.contains("max_set_size")) limits.max_set_size = config_int(config, "max_set_size", 1, 63);
    if (config.contains("max_subsets")) limits.max_subsets = config_u64(config, "max_subsets");
    const VcResult vc = vc_dimension(cls, DomainSpec(cls.dimension()), limits);
    Json out{
        {"experiment", "vc"},
        {"class", class_descriptor_json(cls)},
        {"dimension", vc.dimension},
        {"exact", vc.exact},
    };
    return {{"report.json", out.dump(2) + "\n"}};
}

ArtifactMap run_bounds(const Json& config) {
    PacParams p;
    p.d = config_int(config, "d", 0, 1'000'000);
    p.m = config_u64(config, "m");
    p.delta = config_double(config, "delta", 0.0, 1.0, true, true);
    if (p.m == 0) throw ConfigError("m", "sample size must be positive");
    const std::string mode = config_string(config, "mode");
    double value = 0.0;
    if (mode == "paper") {
        const double c =
            config.contains("constant") ? config_double(config, "constant", 0.0, 1e9, true, false) : 2.0;
        value = vc_bound(p, BoundMode::Paper, c);
    } else if (mode == "classical") {
        value = vc_bound(p, BoundMode::Classical);
    } else if (mode == "fast_rate") {
        value = fast_rate_bound(p);
    } else {
        throw ConfigError("mode", "unknown mode '" + mode + "'; expected paper, classical or fast_rate");
    }
    Json out{{"mode", mode}, {"d", p.d}, {"m", p.m}, {"delta", p.delta}, {"value", value}};
    return {{"report.json", out.dump(2) + "\n"}};
}

ArtifactMap run_dnf3_bench(const Json& config) {
    if (!config.contains("n_values") || !config["n_values"].is_array() || config["n_values"].empty())
        throw ConfigError("n_values", "required nonempty integer array is missing");
    std::vector<int> n_values;
    for (const Json& v : config["n_values"]) {
        if (!v.is_number_integer()) throw ConfigError("n_values", "entries must be integers");
        const std::int64_t n = v.get<std::int64_t>();
        if (n < 1 || n > 13) throw ConfigError("n_values", "n=" + std::to_string(n) + " outside [1, 13]");
        n_values.push_back(static_cast<int>(n));
    }
    const std::size_t m = config_u64(config, "m");
    if (m == 0) throw ConfigError("m", "sample size must be positive");
    const Seed seed = seed_from(config);

    const std::vector<ScalingRecord> records = benchmark_scaling(n_values, m, seed);
    Json rows = Json::array();
    for (const ScalingRecord& r : records) {
        rows.push_back(Json{
            {"n", r.n},
            {"class_cardinality", r.class_cardinality},
            {"expanded_dim", r.expanded_dim},
            {"exhaustive_seconds", r.exhaustive_seconds},
            {"exhaustive_projected", r.exhaustive_projected},
            {"expansion_seconds", r.expansion_seconds},
        });
    }
    Json out{
        {"experiment", "dnf3-bench"},
        {"m", m},
        {"seed", seed.value},
        {"records", rows},
    };
    return {{"report.json", out.dump(2) + "\n"}, {"scaling.csv", scaling_csv(records)}};
}

} // namespace

ArtifactMap execute_config(const Json& config) {
    const std::string kind = config_string(config, "experiment");
    if (kind == "tradeoff") return run_tradeoff(config);
    if (kind == "decompose") return run_decompose(config);
    if (kind == "vc") return run_vc(config);
    if (kind == "bounds") return run_bounds(config);
    if (kind == "dnf3-bench") return run_dnf3_bench(config);
    throw ConfigError("experiment",
                      "unknown kind '" + kind + "'; expected tradeoff, decompose, vc, bounds or dnf3-bench");
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

Json run_config_file(const std::string& config_path, const std::string& out_dir) {
    const auto start = std::chrono::steady_clock::now();
    const std::string text = read_text_file(config_path);
    const Json config = parse_config_text(text);
    const ArtifactMap artifacts = execute_config(config);

    std::filesystem::create_directories(out_dir);
    Json names = Json::array();
    for (const auto& [name, content] : artifacts) {
        write_text_file((std::filesystem::path(out_dir) / name).string(), content);
        names.push_back(name);
    }
    const double seconds =
        std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
            .count();
    Json manifest{
        {"config_hash", fnv1a_hex(text)},
        {"tool_version", kToolVersion},
        {"duration_seconds", seconds},
        {"artifacts", names},
    };
    write_text_file((std::filesystem::path(out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    return manifest;
}

} // namespace ermlab::cli
