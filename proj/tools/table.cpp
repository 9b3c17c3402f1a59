#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace braidberry::cli {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table " + command + ": row has " + std::to_string(row.size()) + " cells, expected " +
                               std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

namespace {

std::string csv_cell(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
    return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
        out << '\n';
    }
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["command"] = table.command;
    doc["parameters"] = table.parameters;
    doc["tolerance"] = table.tolerance;
    doc["status"] = table.passed ? "pass" : "fail";
    doc["columns"] = table.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = json_cell(row[c]);
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace braidberry::cli
