#include "ewwp/series.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace ewwp {

void TimeSeries::validate() const
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != columns.size()) {
            throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " values for " +
                                        std::to_string(columns.size()) + " columns");
        }
    }
}

void TimeSeries::validate_increasing() const
{
    validate();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].front() > rows[i - 1].front())) {
            throw std::invalid_argument("first column is not strictly increasing at row " +
                                        std::to_string(i));
        }
    }
}

namespace {

void write_number(std::ostream& out, double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void emit_csv(const TimeSeries& series, std::ostream& out)
{
    series.validate();
    for (std::size_t c = 0; c < series.columns.size(); ++c) {
        out << (c ? "," : "") << series.columns[c];
    }
    out << '\n';
    for (const auto& row : series.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out << ',';
            }
            write_number(out, row[c]);
        }
        out << '\n';
    }
}

void emit_json(const TimeSeries& series, std::ostream& out)
{
    series.validate();
    nlohmann::json doc;
    doc["columns"] = series.columns;
    doc["rows"] = series.rows;
    out << doc.dump() << '\n';
}

std::string to_string(const TimeSeries& series, OutputFormat format)
{
    std::ostringstream out;
    out.imbue(std::locale::classic());
    if (format == OutputFormat::csv) {
        emit_csv(series, out);
    } else {
        emit_json(series, out);
    }
    return out.str();
}

TimeSeries parse_json(const std::string& text)
{
    const auto doc = nlohmann::json::parse(text);
    TimeSeries series;
    series.columns = doc.at("columns").get<std::vector<std::string>>();
    series.rows = doc.at("rows").get<std::vector<std::vector<double>>>();
    series.validate();
    return series;
}

std::size_t emit(const TimeSeries& series, OutputFormat format, const std::string& path)
{
    const std::string bytes = to_string(series, format);
    if (path.empty() || path == "-") {
        std::cout << bytes;
        std::cout.flush();
        if (!std::cout) {
            throw IoError("failed writing to standard output");
        }
        return bytes.size();
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << bytes;
    file.close();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
    return bytes.size();
}

}  // namespace ewwp
