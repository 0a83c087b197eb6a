#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ermlab {

// Raised when an operation would enumerate more members than the configured
// cap allows. The message always names both the cardinality and the cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(const std::string& what_scope, std::uint64_t cardinality, std::uint64_t cap,
                     bool cardinality_is_lower_bound = false)
        : std::runtime_error(what_scope + " has " +
                             (cardinality_is_lower_bound ? "at least " : "") +
                             std::to_string(cardinality) + " members, exceeding the enumeration cap " +
                             std::to_string(cap)),
          cardinality_(cardinality),
          cap_(cap) {}

    std::uint64_t cardinality() const { return cardinality_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cardinality_;
    std::uint64_t cap_;
};

// Raised by configuration ingestion; names the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& detail)
        : std::runtime_error("config field '" + field + "': " + detail), field_(field) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

// Global cap on how many hypotheses any exhaustive scan may visit.
// Default 2^24; the CLI overrides it from ERMLAB_MAX_ENUM.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

} // namespace ermlab
