#ifndef ZETAVEV_CLI_REPORT_IO_HPP_
#define ZETAVEV_CLI_REPORT_IO_HPP_

// Text serialization of reports. All numbers go through std::to_chars, so
// output does not depend on the global locale.

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <string>
#include <vector>

#include "zetavev/cli/config.hpp"
#include "zetavev/scenarios.hpp"

namespace zetavev::cli {

inline constexpr int significant_digits = 15;

/// Nearest 15-significant-digit decimal; -0 prints as 0.
inline std::string format_number(double v)
{
    if (v == 0.0) {
        return "0";
    }
    std::array<char, 64> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, significant_digits);
    return std::string(buf.data(), r.ptr);
}

inline std::string point_label(Scenario scenario, const std::map<std::string, double>& params)
{
    std::string out = std::string("scenario=") + to_string(scenario);
    for (const auto& [k, v] : params) {
        out += ' ' + k + '=' + detail::shortest(v);
    }
    return out;
}

struct ReportRow {
    std::array<std::string, 5> cells;
};

inline std::vector<ReportRow> report_rows(const VevReport& report)
{
    std::vector<ReportRow> rows;
    for (const auto& e : report.entries()) {
        rows.push_back({{e.quantity, format_number(e.value.real()), format_number(e.value.imag()),
                         to_string(e.mode), to_string(e.provenance)}});
    }
    return rows;
}

/// `# label` followed by one tab-separated record per quantity.
inline std::string format_records(const VevReport& report, const std::string& label)
{
    std::string out = "# " + label + '\n';
    for (const auto& row : report_rows(report)) {
        for (std::size_t i = 0; i < row.cells.size(); ++i) {
            out += row.cells[i];
            out += i + 1 < row.cells.size() ? '\t' : '\n';
        }
    }
    for (const auto& n : report.notes()) {
        out += "# note: " + n + '\n';
    }
    return out;
}

inline std::string format_table(const VevReport& report, const std::string& label)
{
    std::vector<ReportRow> rows{{{"quantity", "re", "im", "mode", "provenance"}}};
    const auto body = report_rows(report);
    rows.insert(rows.end(), body.begin(), body.end());
    std::array<std::size_t, 5> width{};
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < width.size(); ++i) {
            width[i] = std::max(width[i], row.cells[i].size());
        }
    }
    std::string out = label + '\n';
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < width.size(); ++i) {
            line += row.cells[i];
            if (i + 1 < width.size()) {
                line.append(width[i] - row.cells[i].size() + 2, ' ');
            }
        }
        out += line + '\n';
    }
    for (const auto& n : report.notes()) {
        out += "note: " + n + '\n';
    }
    return out;
}

inline std::string format_report(const VevReport& report, const std::string& label,
                                 OutputFormat format)
{
    return format == OutputFormat::table ? format_table(report, label)
                                         : format_records(report, label);
}

}  // namespace zetavev::cli

#endif  // ZETAVEV_CLI_REPORT_IO_HPP_
