#include "ptband/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace ptband {

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b"};

std::string num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void grow(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void pad() {
        if (!(hi > lo)) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    }
};

double map_x(double v, const Range& r) {
    return kMarginLeft + (v - r.lo) / (r.hi - r.lo) * (kWidth - kMarginLeft - kMarginRight);
}

double map_y(double v, const Range& r) {
    return kHeight - kMarginBottom -
           (v - r.lo) / (r.hi - r.lo) * (kHeight - kMarginTop - kMarginBottom);
}

void write_frame(std::ofstream& out, const std::string& title,
                 const std::string& x_label, const std::string& y_label,
                 const Range& xr, const Range& yr) {
    out << "<rect x='" << kMarginLeft << "' y='" << kMarginTop << "' width='"
        << kWidth - kMarginLeft - kMarginRight << "' height='"
        << kHeight - kMarginTop - kMarginBottom
        << "' fill='none' stroke='#444' stroke-width='1'/>\n";
    out << "<text x='" << kWidth / 2 << "' y='22' text-anchor='middle' "
        << "font-family='sans-serif' font-size='15'>" << title << "</text>\n";
    out << "<text x='" << (kMarginLeft + kWidth - kMarginRight) / 2 << "' y='"
        << kHeight - 12 << "' text-anchor='middle' font-family='sans-serif' "
        << "font-size='13'>" << x_label << "</text>\n";
    out << "<text x='16' y='" << kHeight / 2
        << "' text-anchor='middle' font-family='sans-serif' font-size='13' "
        << "transform='rotate(-90 16 " << kHeight / 2 << ")'>" << y_label
        << "</text>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0;
        const double fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
        const double px = map_x(fx, xr);
        const double py = map_y(fy, yr);
        out << "<line x1='" << px << "' y1='" << kHeight - kMarginBottom << "' x2='" << px
            << "' y2='" << kHeight - kMarginBottom + 5 << "' stroke='#444'/>\n";
        out << "<text x='" << px << "' y='" << kHeight - kMarginBottom + 18
            << "' text-anchor='middle' font-family='sans-serif' font-size='11'>"
            << num(fx) << "</text>\n";
        out << "<line x1='" << kMarginLeft - 5 << "' y1='" << py << "' x2='" << kMarginLeft
            << "' y2='" << py << "' stroke='#444'/>\n";
        out << "<text x='" << kMarginLeft - 8 << "' y='" << py + 4
            << "' text-anchor='end' font-family='sans-serif' font-size='11'>" << num(fy)
            << "</text>\n";
    }
}

} // namespace

void write_line_svg(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_line_svg: cannot open " + path);

    Range xr, yr;
    for (const auto& s : series) {
        for (double v : s.x)
            xr.grow(v);
        for (double v : s.y)
            yr.grow(v);
    }
    xr.pad();
    yr.pad();

    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='"
        << kHeight << "' viewBox='0 0 " << kWidth << ' ' << kHeight << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    write_frame(out, title, x_label, y_label, xr, yr);

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % 6];
        out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.3' points='";
        for (std::size_t i = 0; i < series[s].x.size(); ++i)
            out << num(map_x(series[s].x[i], xr)) << ',' << num(map_y(series[s].y[i], yr))
                << ' ';
        out << "'/>\n";
        out << "<text x='" << kWidth - kMarginRight - 8 << "' y='"
            << kMarginTop + 16 + 16 * s << "' text-anchor='end' "
            << "font-family='sans-serif' font-size='12' fill='" << color << "'>"
            << series[s].label << "</text>\n";
    }
    out << "</svg>\n";
}

void write_heatmap_svg(const std::string& path, const std::string& title,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<std::vector<double>>& rows, double x_min,
                       double x_max, double y_min, double y_max) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_heatmap_svg: cannot open " + path);
    if (rows.empty() || rows.front().empty())
        throw std::invalid_argument("write_heatmap_svg: empty data");

    Range vr;
    for (const auto& r : rows)
        for (double v : r)
            vr.grow(v);
    if (!(vr.hi > vr.lo))
        vr.hi = vr.lo + 1.0;

    Range xr{x_min, x_max}, yr{y_min, y_max};
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='"
        << kHeight << "' viewBox='0 0 " << kWidth << ' ' << kHeight << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";

    const std::size_t ny = rows.size();
    const std::size_t nx = rows.front().size();
    const double cell_w = double(kWidth - kMarginLeft - kMarginRight) / nx;
    const double cell_h = double(kHeight - kMarginTop - kMarginBottom) / ny;
    for (std::size_t j = 0; j < ny; ++j) {
        for (std::size_t i = 0; i < nx; ++i) {
            const double f = (rows[j][i] - vr.lo) / (vr.hi - vr.lo);
            // white -> blue ramp
            const int level = static_cast<int>(255 * (1.0 - std::min(1.0, std::max(0.0, f))));
            const double px = kMarginLeft + i * cell_w;
            const double py = kHeight - kMarginBottom - (j + 1) * cell_h;
            out << "<rect x='" << num(px) << "' y='" << num(py) << "' width='"
                << num(cell_w + 0.5) << "' height='" << num(cell_h + 0.5)
                << "' fill='rgb(" << level << ',' << level << ",255)'/>\n";
        }
    }
    write_frame(out, title, x_label, y_label, xr, yr);
    out << "</svg>\n";
}

} // namespace ptband
