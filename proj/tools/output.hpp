#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace bomol::cli {

using Json = nlohmann::ordered_json;

// Table with a fixed column order; cells are numbers or strings.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;
    void add(std::vector<Json> row) { rows.push_back(std::move(row)); }
};

std::string to_csv(const Table& t);                 // 12 significant digits
std::string to_json(const Json& doc);               // 17 significant digits
Json table_rows(const Table& t);                    // array of objects

// (x, y, y_err) columns, whitespace separated, with a comment header.
std::string plot_series(const std::string& title, const std::vector<double>& x,
                        const std::vector<double>& y, const std::vector<double>& y_err);

// Writes via a temporary file in the same directory and renames it into place.
void write_atomic(const std::string& path, const std::string& content);

} // namespace bomol::cli
