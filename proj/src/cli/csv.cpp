#include "cli/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ermlab/errors.hpp"

namespace ermlab::cli {

int CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = 0;
    std::size_t b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
    return s.substr(a, b - a);
}

} // namespace

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::stringstream ss(text);
    std::string line;
    bool have_header = false;
    std::size_t line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const std::string trimmed = strip(line);
        if (trimmed.empty()) continue;
        std::vector<std::string> fields = split_fields(trimmed);
        if (!have_header) {
            for (std::string& f : fields) table.columns.push_back(strip(f));
            have_header = true;
            continue;
        }
        if (fields.size() != table.columns.size())
            throw ConfigError("csv", "row " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                                         " fields, header has " + std::to_string(table.columns.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (const std::string& raw : fields) {
            const std::string f = strip(raw);
            double value = 0.0;
            const char* begin = f.data();
            const char* end = f.data() + f.size();
            const auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc() || ptr != end)
                throw ConfigError("csv", "row " + std::to_string(line_no) + ": cell '" + f + "' is not numeric");
            row.push_back(value);
        }
        table.rows.push_back(std::move(row));
    }
    if (!have_header) throw ConfigError("csv", "missing header row");
    return table;
}

CsvTable read_csv_file(const std::string& path) { return parse_csv(read_text_file(path)); }

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

std::string tradeoff_samples_csv(const TradeoffReport& report) {
    std::string out = "trial,estdecr,emp_gap,gen_gap,risk_gap\n";
    for (int t = 0; t < report.trials; ++t) {
        const std::size_t i = static_cast<std::size_t>(t);
        out += std::to_string(t);
        out += ',';
        out += format_double(report.estdecr[i]);
        out += ',';
        out += format_double(report.emp_gap[i]);
        out += ',';
        out += format_double(report.gen_gap[i]);
        out += ',';
        out += format_double(report.risk_gap[i]);
        out += '\n';
    }
    return out;
}

std::string scaling_csv(const std::vector<ScalingRecord>& records) {
    std::string out = "n,class_cardinality,expanded_dim,exhaustive_seconds,exhaustive_projected,expansion_seconds\n";
    for (const ScalingRecord& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.class_cardinality);
        out += ',';
        out += std::to_string(r.expanded_dim);
        out += ',';
        out += format_double(r.exhaustive_seconds);
        out += ',';
        out += r.exhaustive_projected ? "1" : "0";
        out += ',';
        out += format_double(r.expansion_seconds);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("path", "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

} // namespace ermlab::cli
