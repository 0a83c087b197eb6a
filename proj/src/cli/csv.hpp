#pragma once

#include <string>
#include <vector>

#include "ermlab/decomposition.hpp"
#include "ermlab/dnf3.hpp"

namespace ermlab::cli {

// A numeric table: one header row, all cells parsed as doubles.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column_index(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv_file(const std::string& path);

// Shortest round-trip decimal rendering of a double.
std::string format_double(double value);

// Header "trial,estdecr,emp_gap,gen_gap,risk_gap", one row per trial.
std::string tradeoff_samples_csv(const TradeoffReport& report);

// Header "n,class_cardinality,expanded_dim,exhaustive_seconds,
// exhaustive_projected,expansion_seconds", one row per benchmarked n.
std::string scaling_csv(const std::vector<ScalingRecord>& records);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace ermlab::cli
