#include "cli/config.hpp"

#include "ermlab/errors.hpp"
#include "ermlab/risk.hpp"

namespace ermlab::cli {

Json parse_config_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("(root)", "not valid JSON");
    if (!j.is_object()) throw ConfigError("(root)", "config must be a JSON object");
    return j;
}

int config_int(const Json& j, const std::string& field, int lo, int hi) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ConfigError(field, "required integer is missing");
    const std::int64_t v = j[field].get<std::int64_t>();
    if (v < lo || v > hi)
        throw ConfigError(field, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                     std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::uint64_t config_u64(const Json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ConfigError(field, "required integer is missing");
    if (j[field].is_number_integer() && j[field].get<std::int64_t>() < 0 && !j[field].is_number_unsigned())
        throw ConfigError(field, "value must be nonnegative");
    return j[field].get<std::uint64_t>();
}

double config_double(const Json& j, const std::string& field, double lo, double hi, bool lo_open, bool hi_open) {
    if (!j.contains(field) || !j[field].is_number())
        throw ConfigError(field, "required number is missing");
    const double v = j[field].get<double>();
    const bool lo_ok = lo_open ? v > lo : v >= lo;
    const bool hi_ok = hi_open ? v < hi : v <= hi;
    if (!lo_ok || !hi_ok)
        throw ConfigError(field, "value " + std::to_string(v) + " outside " + (lo_open ? "(" : "[") +
                                     std::to_string(lo) + ", " + std::to_string(hi) + (hi_open ? ")" : "]"));
    return v;
}

std::string config_string(const Json& j, const std::string& field) {
    if (!j.contains(field) || !j[field].is_string())
        throw ConfigError(field, "required string is missing");
    return j[field].get<std::string>();
}

FiniteDistribution distribution_from_config(const Json& config) {
    if (!config.contains("distribution") || !config["distribution"].is_object())
        throw ConfigError("distribution", "required object is missing");
    const Json& d = config["distribution"];
    if (d.contains("support")) {
        try {
            return distribution_from_json(d);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("distribution", e.what());
        }
    }
    if (!d.contains("generator") || !d["generator"].is_object())
        throw ConfigError("distribution", "needs either inline 'support' or a 'generator' object");
    const Json& g = d["generator"];
    const std::string kind = config_string(g, "kind");
    if (kind != "uniform_noisy_target")
        throw ConfigError("distribution", "unknown generator kind '" + kind + "'");
    const int n = config_int(g, "n", 1, 24);
    const double noise = config_double(g, "noise_rate", 0.0, 0.5, false, true);
    if (!g.contains("target"))
        throw ConfigError("target", "generator needs a target hypothesis");
    Hypothesis target = [&] {
        try {
            return hypothesis_from_json(g["target"]);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("target", e.what());
        }
    }();
    const int target_dim = dimension_of(target);
    if (target_dim >= 0 && target_dim != n)
        throw ConfigError("target", "target dimension " + std::to_string(target_dim) + " does not match n=" +
                                        std::to_string(n));
    return uniform_noisy_target(n, target, noise);
}

LearnerMode learner_from_config(const Json& config) {
    if (!config.contains("learner")) return LearnerMode::exhaustive();
    const Json& l = config["learner"];
    if (!l.is_object()) throw ConfigError("learner", "must be an object");
    const std::string mode = config_string(l, "mode");
    if (mode == "exhaustive") return LearnerMode::exhaustive();
    if (mode == "greedy") {
        if (!l.contains("budget")) throw ConfigError("budget", "greedy learner needs a positive budget");
        const std::uint64_t budget = config_u64(l, "budget");
        if (budget == 0) throw ConfigError("budget", "greedy learner needs a positive budget");
        return LearnerMode::greedy(budget);
    }
    throw ConfigError("learner", "unknown mode '" + mode + "'");
}

HypothesisClass class_from_config(const Json& config, const std::string& field) {
    if (!config.contains(field) || !config[field].is_object())
        throw ConfigError(field, "required class descriptor is missing");
    try {
        return class_from_descriptor(config[field]);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(field, e.what());
    }
}

Predicate predicate_from_spec(const std::string& spec) {
    const std::size_t eq = spec.find('=');
    const std::string name = spec.substr(0, eq == std::string::npos ? spec.size() : eq);
    const std::string arg = eq == std::string::npos ? "" : spec.substr(eq + 1);
    const auto int_arg = [&](const char* what) {
        try {
            return std::stoll(arg);
        } catch (...) {
            throw ConfigError("predicate", std::string(what) + " needs an integer argument, got '" + arg + "'");
        }
    };
    if (name == "always_true") return Predicate::always_true();
    if (name == "always_false") return Predicate::always_false();
    if (name == "is_constant") return Predicate::is_constant();
    if (name == "max_literals") return Predicate::max_literals(static_cast<int>(int_arg("max_literals")));
    if (name == "max_depth") return Predicate::max_depth(static_cast<int>(int_arg("max_depth")));
    if (name == "rep_hash") {
        std::uint64_t vals[3] = {0, 0, 0};
        std::size_t start = 0;
        for (int i = 0; i < 3; ++i) {
            const std::size_t comma = arg.find(',', start);
            const std::string part =
                arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                vals[i] = std::stoull(part);
            } catch (...) {
                throw ConfigError("predicate", "rep_hash needs salt,modulus,threshold");
            }
            if (comma == std::string::npos && i < 2)
                throw ConfigError("predicate", "rep_hash needs salt,modulus,threshold");
            start = comma + 1;
        }
        return Predicate::rep_hash(vals[0], vals[1], vals[2]);
    }
    throw ConfigError("predicate", "unknown predicate '" + name + "'");
}

} // namespace ermlab::cli
