#pragma once

#include <map>
#include <string>

#include "cli/config.hpp"

namespace ermlab::cli {

inline constexpr const char* kToolVersion = "ermlab 0.1.0";

// Deterministic outputs of one experiment: file name -> content. The run
// manifest is not part of this map because it carries wall-clock duration.
using ArtifactMap = std::map<std::string, std::string>;

// Dispatches on config["experiment"] in {"tradeoff", "decompose", "vc",
// "bounds", "dnf3-bench"}. Throws ConfigError on bad configs and
// CapExceededError when an enumeration blows the cap.
ArtifactMap execute_config(const Json& config);

// FNV-1a 64-bit hash of the raw text, 16 hex digits.
std::string fnv1a_hex(const std::string& text);

// Reads the config, executes it, writes the artifacts plus manifest.json
// into out_dir (created if needed). Returns the manifest.
Json run_config_file(const std::string& config_path, const std::string& out_dir);

} // namespace ermlab::cli
