#pragma once

#include <optional>
#include <string>

#include "cli/csv.hpp"

namespace ermlab::cli {

enum class PlotKind { RiskVsM, Scaling, GapHistogram };

std::optional<PlotKind> plot_kind_from_string(const std::string& name);

// Renders a fixed 800x600 SVG. Pure function of (table, kind, log_y), so
// identical inputs give byte-identical output.
//   risk-vs-m:      x column "m", every other column a line series
//   scaling:        x column "n"; series exhaustive_seconds (hollow markers on
//                   projected points) and expansion_seconds; log_y honored
//   gap-histogram:  histogram of the "risk_gap" column, 20 bins
// Throws ConfigError on schema mismatch or a table with no data rows.
std::string render_svg_plot(const CsvTable& table, PlotKind kind, bool log_y);

} // namespace ermlab::cli
