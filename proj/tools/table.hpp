#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace braidberry::cli {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// Column-ordered result table with a pass/fail verdict.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    double tolerance = 0.0;
    bool passed = true;

    void add_row(std::vector<Cell> row);
};

/// Header row, comma separated, doubles with 17 significant digits.
void write_csv(const Table& table, std::ostream& out);

/// {command, parameters, tolerance, status, columns, rows}; rows are objects
/// keyed by column name.
void write_json(const Table& table, std::ostream& out);

std::string format_double(double value);

}  // namespace braidberry::cli
