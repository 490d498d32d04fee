#pragma once

#include <string>
#include <vector>

namespace ptband {

struct SvgSeries {
    std::string label;
    std::vector<double> x, y;
};

/// Self-contained static line chart (axes, ticks, legend); no external
/// tooling or fonts beyond generic sans-serif.
void write_line_svg(const std::string& path, const std::string& title,
                    const std::string& x_label, const std::string& y_label,
                    const std::vector<SvgSeries>& series);

/// Heatmap of rows[i][j] (row index = y, column index = x) on given axis
/// ranges, with a blue-white-red ramp over [min, max].
void write_heatmap_svg(const std::string& path, const std::string& title,
                       const std::string& x_label, const std::string& y_label,
                       const std::vector<std::vector<double>>& rows,
                       double x_min, double x_max, double y_min, double y_max);

} // namespace ptband
