#include "median/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "median/errors.hpp"

namespace median {

void write_csv(std::ostream& out, const RunReport& report) {
    out << kCsvHeader << '\n';
    for (const auto& run : report.runs) {
        for (const auto& row : run.rows) {
            const OpCounter& c = row.counters;
            out << row.heuristic << ',' << row.set_size << ',' << row.rep << ',' << row.iteration
                << ',' << format_number(row.sum) << ',' << c.dp_cells << ',' << c.distance_evals
                << ',' << c.stat_updates << ',' << c.rep_updates << ',' << c.total() << ','
                << std::fixed << std::setprecision(3) << row.wall_ms << std::defaultfloat << '\n';
        }
    }
}

void emit_csv(const RunReport& report, const std::filesystem::path& path) {
    if (report.empty()) throw InputError("refusing to write an empty report");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_csv(out, report);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<MetricsRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw InputError("metrics CSV must start with the standard header");
    }
    std::vector<MetricsRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 11) {
            throw InputError("line " + std::to_string(lineno) + ": expected 11 fields");
        }
        auto num = [&](const std::string& text, auto& value) {
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size()) {
                throw InputError("line " + std::to_string(lineno) + ": bad number '" + text + "'");
            }
        };
        MetricsRow row;
        row.heuristic = f[0];
        num(f[1], row.set_size);
        num(f[2], row.rep);
        num(f[3], row.iteration);
        num(f[4], row.sum);
        num(f[5], row.counters.dp_cells);
        num(f[6], row.counters.distance_evals);
        num(f[7], row.counters.stat_updates);
        num(f[8], row.counters.rep_updates);
        std::uint64_t total = 0;
        num(f[9], total);
        if (total != row.counters.total()) {
            throw InputError("line " + std::to_string(lineno) + ": total_ops does not add up");
        }
        num(f[10], row.wall_ms);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Series> ops_by_size(const RunReport& report) {
    std::map<std::string, Series> by_name;
    for (const auto& s : report.summary) {
        auto& series = by_name[s.heuristic];
        series.name = s.heuristic;
        series.points.emplace_back(static_cast<double>(s.set_size), s.mean_total_ops);
    }
    std::vector<Series> out;
    for (auto& [name, series] : by_name) out.push_back(std::move(series));
    return out;
}

std::vector<Series> quality_by_size(const RunReport& report) {
    std::map<std::string, Series> by_name;
    for (const auto& s : report.summary) {
        auto& series = by_name[s.heuristic];
        series.name = s.heuristic;
        series.points.emplace_back(static_cast<double>(s.set_size), s.mean_final_sum);
    }
    std::vector<Series> out;
    for (auto& [name, series] : by_name) out.push_back(std::move(series));
    return out;
}

// Mean distance per member against iteration at the largest set size;
// finished runs hold their final value.
std::vector<Series> error_decrease(const RunReport& report) {
    std::size_t largest = 0;
    for (const auto& run : report.runs) largest = std::max(largest, run.set_size);
    std::map<std::string, std::vector<const RunRecord*>> by_name;
    for (const auto& run : report.runs) {
        if (run.set_size == largest) by_name[run.heuristic].push_back(&run);
    }
    std::vector<Series> out;
    for (const auto& [name, runs] : by_name) {
        std::size_t longest = 0;
        for (const auto* r : runs) longest = std::max(longest, r->rows.size());
        Series series{name, {}};
        for (std::size_t k = 0; k < longest; ++k) {
            double total = 0.0;
            for (const auto* r : runs) total += r->rows[std::min(k, r->rows.size() - 1)].sum;
            const double mean = total / static_cast<double>(runs.size());
            series.points.emplace_back(static_cast<double>(k), mean / static_cast<double>(largest));
        }
        out.push_back(std::move(series));
    }
    return out;
}

namespace {

std::string escape_xml(const std::string& s) {
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

std::string tick_label(double v) {
    std::ostringstream s;
    if (std::fabs(v) >= 1e5) s << std::scientific << std::setprecision(2) << v;
    else s << std::setprecision(4) << v;
    return s.str();
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

std::string svg_line_chart(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<Series>& series) {
    constexpr double width = 640, height = 420;
    constexpr double left = 80, right = 160, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& s : series) {
        for (auto [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    ymin = std::min(ymin, 0.0);

    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return top + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

    std::ostringstream svg;
    svg << std::fixed << std::setprecision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << escape_xml(title) << "</text>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w
        << "\" y2=\"" << top + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double xv = xmin + (xmax - xmin) * t / 4.0;
        const double yv = ymin + (ymax - ymin) * t / 4.0;
        svg << "<text x=\"" << px(xv) << "\" y=\"" << top + plot_h + 16
            << "\" text-anchor=\"middle\">" << tick_label(xv) << "</text>\n";
        svg << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
            << tick_label(yv) << "</text>\n";
    }
    svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 14
        << "\" text-anchor=\"middle\">" << escape_xml(x_label) << "</text>\n";
    svg << "<text transform=\"translate(16," << top + plot_h / 2
        << ") rotate(-90)\" text-anchor=\"middle\">" << escape_xml(y_label) << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = kPalette[i % std::size(kPalette)];
        svg << "<g class=\"series\" data-name=\"" << escape_xml(s.name) << "\">\n";
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (auto [x, y] : s.points) svg << px(x) << ',' << py(y) << ' ';
        svg << "\"/>\n";
        for (auto [x, y] : s.points) {
            svg << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << color
                << "\"/>\n";
        }
        svg << "</g>\n";
        const double ly = top + 14 + 18.0 * static_cast<double>(i);
        svg << "<rect x=\"" << left + plot_w + 14 << "\" y=\"" << ly - 9
            << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        svg << "<text x=\"" << left + plot_w + 32 << "\" y=\"" << ly + 1 << "\">"
            << escape_xml(s.name) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_plots(const RunReport& report, const std::filesystem::path& dir) {
    if (report.empty()) throw InputError("refusing to plot an empty report");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
    auto write = [&](const char* name, const std::string& content) {
        const auto path = dir / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        out << content;
        if (!out) throw IoError("failed writing '" + path.string() + "'");
    };
    write("ops_vs_size.svg", svg_line_chart("Operations vs size of the set", "set size",
                                            "mean total operations", ops_by_size(report)));
    write("quality_vs_size.svg", svg_line_chart("Median quality", "set size",
                                                "mean final sum of distances",
                                                quality_by_size(report)));
    write("error_decrease.svg", svg_line_chart("Error decrease", "iteration",
                                               "mean distance to members", error_decrease(report)));
}

}  // namespace median
