#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "synthtab/schema.hpp"

namespace synthtab {

// A cell is missing, a number (continuous or integer column), or a
// categorical code.
using Cell = std::variant<std::monostate, double, std::string>;

inline bool cell_missing(const Cell& c) { return std::holds_alternative<std::monostate>(c); }
inline bool cell_is_number(const Cell& c) { return std::holds_alternative<double>(c); }
double cell_number(const Cell& c);
const std::string& cell_code(const Cell& c);

// Shortest round-trip decimal representation ("0.1", not "0.1000...").
std::string format_number(double v);
// Canonical text form of a cell for CSV and prompt serialization; missing -> "".
std::string cell_to_string(const Cell& c, const ColumnSpec& spec);

struct DataTable {
    TableSchema schema;
    std::vector<std::vector<Cell>> rows;  // cells in schema column order

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return schema.columns.size(); }

    bool row_complete(std::size_t i) const;
    // Checks every cell against the schema (shape, categorical domain,
    // integer wholeness); throws ValidationError on the first violation.
    void validate() const;
};

struct DropResult {
    DataTable table;
    std::size_t removed = 0;
};

// Keeps exactly the rows without missing cells; errors if none survive.
DropResult drop_incomplete_rows(const DataTable& table);

struct SplitPlan {
    std::uint64_t seed = 0;
    double train_fraction = 0.0;
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> test_indices;
};

// Uniform random unstratified partition; |train| = floor(fraction * n).
SplitPlan plan_split(std::size_t n_rows, double train_fraction, std::uint64_t seed);
std::pair<DataTable, DataTable> split(const DataTable& table, double train_fraction,
                                      std::uint64_t seed);

DataTable take_rows(const DataTable& table, const std::vector<std::size_t>& indices);
DataTable concat_rows(const DataTable& a, const DataTable& b);

}  // namespace synthtab
