#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace synthtab {

enum class ColumnKind { Continuous, Integer, Categorical };

std::string kind_name(ColumnKind kind);
ColumnKind kind_from_name(const std::string& name);

struct Category {
    std::string code;   // value stored in the data, e.g. "1"
    std::string label;  // human meaning, e.g. "Male"
};

// Typed column definition; the categorical code->label mapping lives here and
// is rendered into generation prompts instead of being applied to the data.
struct ColumnSpec {
    std::string name;
    ColumnKind kind = ColumnKind::Continuous;
    std::string unit;        // empty = no unit
    std::string definition;  // plain-text description, feeds the prompt
    std::vector<Category> categories;
    std::optional<std::pair<double, double>> plausible_range;

    bool is_numeric() const { return kind != ColumnKind::Categorical; }
    // Index into categories, or -1 when the code is not declared.
    int category_index(const std::string& code) const;
};

struct TableSchema {
    std::vector<ColumnSpec> columns;
    std::string target_column;             // utility task target; empty = none
    std::vector<std::string> key_fields;   // CAP attacker keys
    std::string sensitive_field;           // CAP sensitive field; empty = none

    int column_index(const std::string& name) const;
    const ColumnSpec& column(const std::string& name) const;
    std::size_t n_columns() const { return columns.size(); }

    // Checks all schema invariants; throws ValidationError naming the problem.
    void validate() const;

    static TableSchema from_json(const std::string& text);
    static TableSchema load(const std::string& path);
    std::string to_json() const;
};

}  // namespace synthtab
