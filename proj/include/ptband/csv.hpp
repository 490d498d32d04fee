#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace ptband {

/// %.17g rendering: shortest form that round-trips a double.
std::string format_g17(double value);

/// Minimal CSV emitter: UTF-8, LF line endings, one header row, floats at
/// 17 significant digits. Output is a pure function of the written cells,
/// so identical runs produce byte-identical files.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void row(const std::vector<std::string>& cells);

    /// Convenience for all-numeric rows.
    void row(const std::vector<double>& cells);

    bool good() const { return out_.good(); }

private:
    std::ofstream out_;
    std::size_t columns_;
};

} // namespace ptband
