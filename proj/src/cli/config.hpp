#pragma once

#include <cstdint>
#include <string>

#include "ermlab/erm.hpp"
#include "ermlab/json_io.hpp"

namespace ermlab::cli {

// Parses raw JSON text; malformed input becomes a ConfigError.
Json parse_config_text(const std::string& text);

// Field accessors that raise ConfigError naming the offending field.
int config_int(const Json& j, const std::string& field, int lo, int hi);
std::uint64_t config_u64(const Json& j, const std::string& field);
double config_double(const Json& j, const std::string& field, double lo, double hi, bool lo_open, bool hi_open);
std::string config_string(const Json& j, const std::string& field);

// "distribution" is either an inline {"n", "support"} object or
// {"generator": {"kind": "uniform_noisy_target", "n", "target", "noise_rate"}}.
FiniteDistribution distribution_from_config(const Json& j);

// {"mode": "exhaustive"} or {"mode": "greedy", "budget": int}; defaults to
// exhaustive when the field is absent.
LearnerMode learner_from_config(const Json& config);

HypothesisClass class_from_config(const Json& config, const std::string& field);

// Command-line predicate spec: "max_literals=K", "max_depth=D",
// "is_constant", "always_true", "always_false", "rep_hash=SALT,MOD,THRESH".
Predicate predicate_from_spec(const std::string& spec);

} // namespace ermlab::cli
