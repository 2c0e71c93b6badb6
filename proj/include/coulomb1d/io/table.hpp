#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace c1d::io {

struct Column {
    std::string name;
    std::string unit;  // "1" for dimensionless
};

// Strings carry extended-precision values and labels; they are always quoted
// in CSV so a numeric-looking string re-parses as a string.
using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);  // throws config_error on width mismatch
    bool operator==(const Table& o) const;
};

enum class Format { csv, json };

// Shortest representation that parses back to the same double.
std::string format_double(double x);

// CSV: "# key=value" meta lines, then a "name [unit]" header, then rows.
// JSON: {"meta": {...}, "columns": [{"name", "unit"}], "rows": [[...]]}; a non-finite
// double becomes {"nonfinite": "nan" | "inf" | "-inf"}.
void write(const Table& t, Format f, std::ostream& os);
Table read(Format f, std::istream& is);

} // namespace c1d::io
