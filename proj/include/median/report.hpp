#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "median/experiment.hpp"

namespace median {

inline constexpr const char* kCsvHeader =
    "heuristic,set_size,rep,iteration,sum,dp_cells,distance_evals,stat_updates,rep_updates,"
    "total_ops,wall_ms";

void write_csv(std::ostream& out, const RunReport& report);
// Throws InputError on an empty report (before touching the path), IoError
// when the file cannot be written.
void emit_csv(const RunReport& report, const std::filesystem::path& path);

std::vector<MetricsRow> read_csv(std::istream& in);

// Writes ops_vs_size.svg, quality_vs_size.svg and error_decrease.svg.
void emit_plots(const RunReport& report, const std::filesystem::path& dir);

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
};

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<Series>& series);

// The series plotted by emit_plots, exposed for inspection.
std::vector<Series> ops_by_size(const RunReport& report);
std::vector<Series> quality_by_size(const RunReport& report);
std::vector<Series> error_decrease(const RunReport& report);

}  // namespace median
