#include "cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ermlab/errors.hpp"

namespace ermlab::cli {

std::optional<PlotKind> plot_kind_from_string(const std::string& name) {
    if (name == "risk-vs-m") return PlotKind::RiskVsM;
    if (name == "scaling") return PlotKind::Scaling;
    if (name == "gap-histogram") return PlotKind::GapHistogram;
    return std::nullopt;
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 770.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 540.0;

const char* kSeriesColors[6] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    // Degenerate ranges get a deterministic pad so single points render.
    void finalize() {
        if (lo > hi) std::swap(lo, hi);
        if (hi - lo < 1e-300) {
            const double pad = std::abs(lo) > 1e-12 ? std::abs(lo) * 0.5 : 1.0;
            lo -= pad;
            hi += pad;
        }
    }

    double fraction(double v) const { return (v - lo) / (hi - lo); }
};

double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * mult >= raw) return mag * mult;
    }
    return mag * 10.0;
}

struct Canvas {
    std::ostringstream out;

    void open() {
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
               "viewBox=\"0 0 800 600\">\n";
        out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
    }

    void close() { out << "</svg>\n"; }

    void line(double x1, double y1, double x2, double y2, const char* stroke, double width) {
        out << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
            << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, const char* anchor, int size) {
        out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" text-anchor=\"" << anchor
            << "\" font-family=\"monospace\" font-size=\"" << size << "\">" << xml_escape(s) << "</text>\n";
    }

    void axes() {
        line(kLeft, kTop, kLeft, kBottom, "#000000", 1.5);
        line(kLeft, kBottom, kRight, kBottom, "#000000", 1.5);
    }
};

double x_pixel(const Range& r, double v) { return kLeft + r.fraction(v) * (kRight - kLeft); }
double y_pixel(const Range& r, double v) { return kBottom - r.fraction(v) * (kBottom - kTop); }

void draw_x_ticks(Canvas& canvas, const Range& r, const std::string& label) {
    const double step = nice_step(r.hi - r.lo, 6);
    const double first = std::ceil(r.lo / step) * step;
    for (double v = first; v <= r.hi + step * 1e-9; v += step) {
        const double px = x_pixel(r, v);
        canvas.line(px, kBottom, px, kBottom + 5.0, "#000000", 1.0);
        canvas.text(px, kBottom + 20.0, fmt_tick(v), "middle", 12);
    }
    canvas.text((kLeft + kRight) / 2.0, kBottom + 40.0, label, "middle", 14);
}

void draw_y_ticks(Canvas& canvas, const Range& r, const std::string& label, bool log_scale) {
    if (log_scale) {
        const int lo = static_cast<int>(std::ceil(r.lo - 1e-9));
        const int hi = static_cast<int>(std::floor(r.hi + 1e-9));
        for (int e = lo; e <= hi; ++e) {
            const double py = y_pixel(r, static_cast<double>(e));
            canvas.line(kLeft - 5.0, py, kLeft, py, "#000000", 1.0);
            canvas.text(kLeft - 8.0, py + 4.0, "1e" + std::to_string(e), "end", 12);
            canvas.line(kLeft, py, kRight, py, "#dddddd", 0.5);
        }
    } else {
        const double step = nice_step(r.hi - r.lo, 6);
        const double first = std::ceil(r.lo / step) * step;
        for (double v = first; v <= r.hi + step * 1e-9; v += step) {
            const double py = y_pixel(r, v);
            canvas.line(kLeft - 5.0, py, kLeft, py, "#000000", 1.0);
            canvas.text(kLeft - 8.0, py + 4.0, fmt_tick(v), "end", 12);
            canvas.line(kLeft, py, kRight, py, "#dddddd", 0.5);
        }
    }
    canvas.text(kLeft, kTop - 15.0, label + (log_scale ? " (log10)" : ""), "start", 14);
}

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<bool> hollow; // marker style per point
};

void require_rows(const CsvTable& table) {
    if (table.rows.empty()) throw ConfigError("csv", "no data rows");
}

int require_column(const CsvTable& table, const std::string& name, const char* kind) {
    const int idx = table.column_index(name);
    if (idx < 0)
        throw ConfigError("csv", "missing column '" + name + "' required by plot kind " + kind);
    return idx;
}

std::string render_series_plot(const std::vector<Series>& series, const std::string& x_label,
                               const std::string& y_label, bool log_y) {
    Range xr{series[0].x[0], series[0].x[0]};
    Range yr{0.0, 0.0};
    bool y_init = false;
    for (const Series& s : series) {
        for (double v : s.x) {
            xr.lo = std::min(xr.lo, v);
            xr.hi = std::max(xr.hi, v);
        }
        for (double v : s.y) {
            const double t = log_y ? std::log10(std::max(v, 1e-12)) : v;
            if (!y_init) {
                yr = {t, t};
                y_init = true;
            } else {
                yr.lo = std::min(yr.lo, t);
                yr.hi = std::max(yr.hi, t);
            }
        }
    }
    xr.finalize();
    yr.finalize();

    Canvas canvas;
    canvas.open();
    draw_y_ticks(canvas, yr, y_label, log_y);
    draw_x_ticks(canvas, xr, x_label);
    canvas.axes();

    for (std::size_t si = 0; si < series.size(); ++si) {
        const Series& s = series[si];
        const char* color = kSeriesColors[si % 6];
        if (s.x.size() > 1) {
            canvas.out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                const double v = log_y ? std::log10(std::max(s.y[i], 1e-12)) : s.y[i];
                if (i > 0) canvas.out << ' ';
                canvas.out << fmt(x_pixel(xr, s.x[i])) << ',' << fmt(y_pixel(yr, v));
            }
            canvas.out << "\"/>\n";
        }
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double v = log_y ? std::log10(std::max(s.y[i], 1e-12)) : s.y[i];
            canvas.out << "<circle cx=\"" << fmt(x_pixel(xr, s.x[i])) << "\" cy=\"" << fmt(y_pixel(yr, v))
                       << "\" r=\"4\" stroke=\"" << color << "\" stroke-width=\"1.5\" fill=\""
                       << (s.hollow[i] ? "#ffffff" : color) << "\"/>\n";
        }
        // Legend entry.
        const double ly = kTop + 18.0 * static_cast<double>(si);
        canvas.line(kRight - 150.0, ly, kRight - 120.0, ly, color, 2.0);
        canvas.text(kRight - 112.0, ly + 4.0, s.name, "start", 12);
    }
    canvas.close();
    return canvas.out.str();
}

std::string render_histogram(const CsvTable& table, const std::string& column) {
    const int idx = require_column(table, column, "gap-histogram");
    std::vector<double> values;
    values.reserve(table.rows.size());
    for (const std::vector<double>& row : table.rows) values.push_back(row[static_cast<std::size_t>(idx)]);

    Range xr{values[0], values[0]};
    for (double v : values) {
        xr.lo = std::min(xr.lo, v);
        xr.hi = std::max(xr.hi, v);
    }
    xr.finalize();

    constexpr int kBins = 20;
    std::vector<int> counts(kBins, 0);
    for (double v : values) {
        int b = static_cast<int>(xr.fraction(v) * kBins);
        b = std::clamp(b, 0, kBins - 1);
        ++counts[static_cast<std::size_t>(b)];
    }
    Range yr{0.0, static_cast<double>(*std::max_element(counts.begin(), counts.end()))};
    yr.finalize();

    Canvas canvas;
    canvas.open();
    draw_y_ticks(canvas, yr, "count", false);
    draw_x_ticks(canvas, xr, column);
    canvas.axes();
    const double bin_width = (kRight - kLeft) / kBins;
    for (int b = 0; b < kBins; ++b) {
        const int c = counts[static_cast<std::size_t>(b)];
        if (c == 0) continue;
        const double x = kLeft + bin_width * b;
        const double y = y_pixel(yr, static_cast<double>(c));
        canvas.out << "<rect x=\"" << fmt(x + 1.0) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(bin_width - 2.0)
                   << "\" height=\"" << fmt(kBottom - y) << "\" fill=\"#1f77b4\" stroke=\"#0d3d61\" "
                      "stroke-width=\"1\"/>\n";
    }
    canvas.close();
    return canvas.out.str();
}

} // namespace

std::string render_svg_plot(const CsvTable& table, PlotKind kind, bool log_y) {
    require_rows(table);
    switch (kind) {
        case PlotKind::RiskVsM: {
            const int x_idx = require_column(table, "m", "risk-vs-m");
            std::vector<Series> series;
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                if (static_cast<int>(c) == x_idx) continue;
                Series s;
                s.name = table.columns[c];
                for (const std::vector<double>& row : table.rows) {
                    s.x.push_back(row[static_cast<std::size_t>(x_idx)]);
                    s.y.push_back(row[c]);
                    s.hollow.push_back(false);
                }
                series.push_back(std::move(s));
            }
            if (series.empty()) throw ConfigError("csv", "risk-vs-m needs at least one series column besides 'm'");
            return render_series_plot(series, "m", "value", log_y);
        }
        case PlotKind::Scaling: {
            const int n_idx = require_column(table, "n", "scaling");
            const int ex_idx = require_column(table, "exhaustive_seconds", "scaling");
            const int proj_idx = require_column(table, "exhaustive_projected", "scaling");
            const int exp_idx = require_column(table, "expansion_seconds", "scaling");
            Series exhaustive{"exhaustive_seconds", {}, {}, {}};
            Series expansion{"expansion_seconds", {}, {}, {}};
            for (const std::vector<double>& row : table.rows) {
                exhaustive.x.push_back(row[static_cast<std::size_t>(n_idx)]);
                exhaustive.y.push_back(row[static_cast<std::size_t>(ex_idx)]);
                exhaustive.hollow.push_back(row[static_cast<std::size_t>(proj_idx)] != 0.0);
                expansion.x.push_back(row[static_cast<std::size_t>(n_idx)]);
                expansion.y.push_back(row[static_cast<std::size_t>(exp_idx)]);
                expansion.hollow.push_back(false);
            }
            return render_series_plot({exhaustive, expansion}, "n", "seconds", log_y);
        }
        case PlotKind::GapHistogram:
            return render_histogram(table, "risk_gap");
    }
    throw ConfigError("kind", "unknown plot kind");
}

} // namespace ermlab::cli
