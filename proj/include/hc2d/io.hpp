#pragma once

#include <string>
#include <vector>

namespace hc2d::io {

// 12 significant digits, locale-independent, '.' decimal separator.
// Identical input bits always yield identical text.
std::string format_double(double v);

std::string format_int(long long v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // each row matches columns
};

void write_csv(const std::string& path, const Table& table);

// Single JSON document {"meta": {...}, "data": [row objects]}.
// meta_json must be a serialized JSON object (config echo + version).
void write_json(const std::string& path, const std::string& meta_json,
                const Table& table);

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

// Minimal SVG line chart: one polyline per series, framed axes with tick
// labels, a small legend. No external styling.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series);

} // namespace hc2d::io
