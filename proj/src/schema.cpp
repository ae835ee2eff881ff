#include "synthtab/schema.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "synthtab/errors.hpp"
#include "synthtab/table.hpp"

namespace synthtab {

using json = nlohmann::ordered_json;

std::string kind_name(ColumnKind kind) {
    switch (kind) {
        case ColumnKind::Continuous: return "continuous";
        case ColumnKind::Integer: return "integer";
        case ColumnKind::Categorical: return "categorical";
    }
    return "unknown";
}

ColumnKind kind_from_name(const std::string& name) {
    if (name == "continuous") return ColumnKind::Continuous;
    if (name == "integer") return ColumnKind::Integer;
    if (name == "categorical") return ColumnKind::Categorical;
    throw ValidationError("unknown column kind '" + name + "'");
}

int ColumnSpec::category_index(const std::string& code) const {
    for (std::size_t i = 0; i < categories.size(); ++i) {
        if (categories[i].code == code) return static_cast<int>(i);
    }
    return -1;
}

int TableSchema::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

const ColumnSpec& TableSchema::column(const std::string& name) const {
    const int idx = column_index(name);
    if (idx < 0) throw ValidationError("unknown column '" + name + "'");
    return columns[static_cast<std::size_t>(idx)];
}

void TableSchema::validate() const {
    if (columns.empty()) throw ValidationError("schema has no columns");

    std::set<std::string> names;
    for (const auto& col : columns) {
        if (col.name.empty()) throw ValidationError("column with empty name");
        if (!names.insert(col.name).second)
            throw ValidationError("duplicate column name '" + col.name + "'");

        if (col.kind == ColumnKind::Categorical) {
            if (col.categories.empty())
                throw ValidationError("categorical column '" + col.name + "' has no categories");
        } else if (!col.categories.empty()) {
            throw ValidationError("non-categorical column '" + col.name + "' declares categories");
        }

        std::set<std::string> codes, labels;
        for (const auto& cat : col.categories) {
            if (!codes.insert(cat.code).second)
                throw ValidationError("duplicate category code '" + cat.code + "' in column '" +
                                      col.name + "'");
            if (!labels.insert(cat.label).second)
                throw ValidationError("duplicate category label '" + cat.label + "' in column '" +
                                      col.name + "'");
        }

        if (col.plausible_range && !(col.plausible_range->first < col.plausible_range->second))
            throw ValidationError("column '" + col.name + "' range min must be < max");
    }

    auto require_column = [&](const std::string& name, const char* role) {
        if (column_index(name) < 0)
            throw ValidationError(std::string(role) + " '" + name + "' is not a schema column");
    };

    if (!target_column.empty()) require_column(target_column, "target_column");
    for (const auto& key : key_fields) require_column(key, "key field");
    if (!sensitive_field.empty()) {
        require_column(sensitive_field, "sensitive_field");
        for (const auto& key : key_fields) {
            if (key == sensitive_field)
                throw ValidationError("sensitive_field '" + sensitive_field +
                                      "' must not also be a key field");
        }
        const auto& col = column(sensitive_field);
        if (col.kind == ColumnKind::Continuous)
            throw ValidationError("sensitive_field '" + sensitive_field +
                                  "' must be categorical or integer");
    }
}

namespace {

// Schema files may carry category codes as JSON numbers; canonicalize to the
// same text form the data model uses.
std::string code_to_string(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number()) return format_number(j.get<double>());
    throw ValidationError("category code must be a string or number");
}

}  // namespace

TableSchema TableSchema::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid schema JSON: ") + e.what());
    }

    TableSchema schema;
    if (!doc.contains("columns") || !doc["columns"].is_array())
        throw ValidationError("schema JSON must contain a 'columns' array");

    for (const auto& jcol : doc["columns"]) {
        ColumnSpec col;
        col.name = jcol.at("name").get<std::string>();
        col.kind = kind_from_name(jcol.at("kind").get<std::string>());
        col.unit = jcol.value("unit", std::string());
        col.definition = jcol.value("definition", std::string());
        if (jcol.contains("categories")) {
            for (const auto& jcat : jcol["categories"]) {
                Category cat;
                cat.code = code_to_string(jcat.at("code"));
                cat.label = jcat.at("label").get<std::string>();
                col.categories.push_back(std::move(cat));
            }
        }
        if (jcol.contains("range")) {
            const auto& r = jcol["range"];
            if (!r.is_array() || r.size() != 2)
                throw ValidationError("column '" + col.name + "' range must be [min, max]");
            col.plausible_range = {r[0].get<double>(), r[1].get<double>()};
        }
        schema.columns.push_back(std::move(col));
    }

    schema.target_column = doc.value("target_column", std::string());
    if (doc.contains("key_fields")) {
        for (const auto& k : doc["key_fields"]) schema.key_fields.push_back(k.get<std::string>());
    }
    schema.sensitive_field = doc.value("sensitive_field", std::string());

    schema.validate();
    return schema;
}

TableSchema TableSchema::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open schema file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

std::string TableSchema::to_json() const {
    json doc;
    doc["columns"] = json::array();
    for (const auto& col : columns) {
        json jcol;
        jcol["name"] = col.name;
        jcol["kind"] = kind_name(col.kind);
        if (!col.unit.empty()) jcol["unit"] = col.unit;
        if (!col.definition.empty()) jcol["definition"] = col.definition;
        if (!col.categories.empty()) {
            jcol["categories"] = json::array();
            for (const auto& cat : col.categories)
                jcol["categories"].push_back({{"code", cat.code}, {"label", cat.label}});
        }
        if (col.plausible_range)
            jcol["range"] = {col.plausible_range->first, col.plausible_range->second};
        doc["columns"].push_back(std::move(jcol));
    }
    if (!target_column.empty()) doc["target_column"] = target_column;
    if (!key_fields.empty()) doc["key_fields"] = key_fields;
    if (!sensitive_field.empty()) doc["sensitive_field"] = sensitive_field;
    return doc.dump(2);
}

}  // namespace synthtab
