#include "synthtab/table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "synthtab/errors.hpp"
#include "synthtab/rng.hpp"

namespace synthtab {

double cell_number(const Cell& c) {
    if (!cell_is_number(c)) throw ValidationError("cell is not numeric");
    return std::get<double>(c);
}

const std::string& cell_code(const Cell& c) {
    if (!std::holds_alternative<std::string>(c))
        throw ValidationError("cell is not a categorical code");
    return std::get<std::string>(c);
}

std::string format_number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string cell_to_string(const Cell& c, const ColumnSpec& spec) {
    if (cell_missing(c)) return "";
    if (spec.kind == ColumnKind::Categorical) return cell_code(c);
    return format_number(cell_number(c));
}

bool DataTable::row_complete(std::size_t i) const {
    for (const auto& cell : rows[i]) {
        if (cell_missing(cell)) return false;
    }
    return true;
}

void DataTable::validate() const {
    schema.validate();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != schema.columns.size())
            throw ValidationError("row " + std::to_string(r) + " has " +
                                  std::to_string(rows[r].size()) + " cells, schema has " +
                                  std::to_string(schema.columns.size()) + " columns");
        for (std::size_t c = 0; c < schema.columns.size(); ++c) {
            const auto& spec = schema.columns[c];
            const Cell& cell = rows[r][c];
            if (cell_missing(cell)) continue;
            if (spec.kind == ColumnKind::Categorical) {
                if (!std::holds_alternative<std::string>(cell) ||
                    spec.category_index(std::get<std::string>(cell)) < 0)
                    throw ValidationError("row " + std::to_string(r) + " column '" + spec.name +
                                          "': value outside declared categories");
            } else {
                if (!cell_is_number(cell))
                    throw ValidationError("row " + std::to_string(r) + " column '" + spec.name +
                                          "': expected a number");
                const double v = std::get<double>(cell);
                if (spec.kind == ColumnKind::Integer && v != std::floor(v))
                    throw ValidationError("row " + std::to_string(r) + " column '" + spec.name +
                                          "': integer column holds non-whole value");
            }
        }
    }
}

DropResult drop_incomplete_rows(const DataTable& table) {
    DropResult result;
    result.table.schema = table.schema;
    for (std::size_t i = 0; i < table.n_rows(); ++i) {
        if (table.row_complete(i)) {
            result.table.rows.push_back(table.rows[i]);
        } else {
            ++result.removed;
        }
    }
    if (result.table.rows.empty() && table.n_rows() > 0)
        throw ValidationError("empty table after exclusion of incomplete rows");
    return result;
}

SplitPlan plan_split(std::size_t n_rows, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw ValidationError("train_fraction must lie in (0,1)");
    if (n_rows < 2) throw ValidationError("split requires at least 2 rows");

    std::vector<std::size_t> order(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    const auto n_train =
        static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n_rows)));

    SplitPlan plan;
    plan.seed = seed;
    plan.train_fraction = train_fraction;
    plan.train_indices.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
    plan.test_indices.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
    std::sort(plan.train_indices.begin(), plan.train_indices.end());
    std::sort(plan.test_indices.begin(), plan.test_indices.end());
    return plan;
}

std::pair<DataTable, DataTable> split(const DataTable& table, double train_fraction,
                                      std::uint64_t seed) {
    const SplitPlan plan = plan_split(table.n_rows(), train_fraction, seed);
    return {take_rows(table, plan.train_indices), take_rows(table, plan.test_indices)};
}

DataTable take_rows(const DataTable& table, const std::vector<std::size_t>& indices) {
    DataTable out;
    out.schema = table.schema;
    out.rows.reserve(indices.size());
    for (std::size_t idx : indices) out.rows.push_back(table.rows.at(idx));
    return out;
}

DataTable concat_rows(const DataTable& a, const DataTable& b) {
    DataTable out = a;
    out.rows.insert(out.rows.end(), b.rows.begin(), b.rows.end());
    return out;
}

}  // namespace synthtab
