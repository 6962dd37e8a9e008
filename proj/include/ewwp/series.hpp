#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace ewwp {

/// Labelled table whose first column is the ordering key (t, n or m).
struct TimeSeries {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Throws std::invalid_argument if a row's arity differs from the header.
    void validate() const;
    /// Additionally requires the first column to increase strictly.
    void validate_increasing() const;

    bool operator==(const TimeSeries&) const = default;
};

enum class OutputFormat { csv, json };

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Header line, then one line per row; 17 significant digits, '.' decimal
/// separator, '\n' line endings.
void emit_csv(const TimeSeries& series, std::ostream& out);

/// {"columns": [...], "rows": [[...], ...]}
void emit_json(const TimeSeries& series, std::ostream& out);

std::string to_string(const TimeSeries& series, OutputFormat format);

TimeSeries parse_json(const std::string& text);

/// Writes to `path`, or to standard output when path is empty or "-".
/// Returns the number of bytes written; throws IoError naming the path.
std::size_t emit(const TimeSeries& series, OutputFormat format, const std::string& path);

}  // namespace ewwp
