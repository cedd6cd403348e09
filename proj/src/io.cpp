#include "hc2d/io.hpp"
#include "hc2d/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>

namespace hc2d::io {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[40];
    // shortest representation that parses back to the same double
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_int(long long v) {
    char buf[24];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // fixed \n line endings
    if (!out) {
        throw DomainError("io: cannot open output file '" + path + "'");
    }
    return out;
}

} // namespace

void write_csv(const std::string& path, const Table& table) {
    auto out = open_out(path);
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << row[c];
        }
        out << "\n";
    }
    if (!out) {
        throw ComputeError("io: write failed for '" + path + "'");
    }
}

void write_json(const std::string& path, const std::string& meta_json,
                const Table& table) {
    auto out = open_out(path);
    out << "{\n  \"meta\": " << meta_json << ",\n  \"data\": [";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << (r ? ",\n    {" : "\n    {");
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            // cells are numeric literals, valid JSON as-is
            out << (c ? ", " : "") << "\"" << table.columns[c] << "\": " << table.rows[r][c];
        }
        out << "}";
    }
    out << (table.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
    if (!out) {
        throw ComputeError("io: write failed for '" + path + "'");
    }
}

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string tick_text(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 5);
    return std::string(buf, res.ptr);
}

} // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<PlotSeries>& series) {
    double x_min = std::numeric_limits<double>::max(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& s : series) {
        for (double v : s.x) { x_min = std::min(x_min, v); x_max = std::max(x_max, v); }
        for (double v : s.y) { y_min = std::min(y_min, v); y_max = std::max(y_max, v); }
    }
    if (!(x_max >= x_min) || !(y_max >= y_min)) {
        throw DomainError("io: nothing to plot");
    }
    if (x_max == x_min) { x_min -= 0.5; x_max += 0.5; }
    if (y_max == y_min) { y_min -= 0.5; y_max += 0.5; }
    const double pad_y = 0.05 * (y_max - y_min);
    y_min -= pad_y;
    y_max += pad_y;

    const double width = 900, height = 560;
    const double ml = 80, mr = 170, mt = 50, mb = 60;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto sx = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    auto sy = [&](double y) { return mt + (y_max - y) / (y_max - y_min) * ph; };

    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"28\" font-size=\"17\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\">" << title << "</text>\n";

    for (int i = 0; i <= 5; ++i) {
        const double fx = x_min + (x_max - x_min) * i / 5.0;
        const double fy = y_min + (y_max - y_min) * i / 5.0;
        out << "<line x1=\"" << sx(fx) << "\" y1=\"" << mt + ph << "\" x2=\"" << sx(fx)
            << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << sx(fx) << "\" y=\"" << mt + ph + 20
            << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">"
            << tick_text(fx) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << sy(fy) << "\" x2=\"" << ml
            << "\" y2=\"" << sy(fy) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 9 << "\" y=\"" << sy(fy) + 4
            << "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">"
            << tick_text(fy) << "</text>\n";
    }
    out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
        << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 15
        << "\" font-size=\"14\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << x_label << "</text>\n";
    out << "<text x=\"22\" y=\"" << mt + ph / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "transform=\"rotate(-90 22 " << mt + ph / 2 << ")\">" << y_label << "</text>\n";

    int color = 0;
    double legend_y = mt + 10;
    for (const auto& s : series) {
        const char* stroke = kPalette[color % 10];
        out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            out << sx(s.x[i]) << "," << sy(s.y[i]) << " ";
        }
        out << "\"/>\n";
        out << "<line x1=\"" << ml + pw + 12 << "\" y1=\"" << legend_y << "\" x2=\""
            << ml + pw + 36 << "\" y2=\"" << legend_y << "\" stroke=\"" << stroke
            << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << ml + pw + 42 << "\" y=\"" << legend_y + 4
            << "\" font-size=\"12\" font-family=\"sans-serif\">" << s.name << "</text>\n";
        legend_y += 18;
        ++color;
    }
    out << "</svg>\n";
    if (!out) {
        throw ComputeError("io: write failed for '" + path + "'");
    }
}

} // namespace hc2d::io
