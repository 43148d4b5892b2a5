#include "table.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace spacelike::cli {

namespace {

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.16e", v);
    return buffer;
}

// True when the text would not survive a parse round-trip unquoted:
// either it contains CSV syntax, or a bare reading would turn it into
// an empty cell, a boolean, or a number instead of a string.
bool needs_quoting(const std::string& s) {
    if (s.empty() || s == "true" || s == "false") {
        return true;
    }
    if (s.find_first_of(",\"\n\r") != std::string::npos) {
        return true;
    }
    char* end = nullptr;
    (void)std::strtod(s.c_str(), &end);
    return end != nullptr && *end == '\0' && end != s.c_str();
}

std::string csv_escape(const std::string& s) {
    if (!needs_quoting(s)) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_to_csv(const Cell& cell) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return "";
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else {
                return csv_escape(v);
            }
        },
        cell);
}

// A raw CSV field, with quoting already stripped; `quoted` distinguishes
// "" (empty cell) from """" (empty string).
Cell field_to_cell(const std::string& field, bool quoted) {
    if (quoted) {
        return field;
    }
    if (field.empty()) {
        return std::monostate{};
    }
    if (field == "true") {
        return true;
    }
    if (field == "false") {
        return false;
    }
    char* end = nullptr;
    const double value = std::strtod(field.c_str(), &end);
    if (end != nullptr && *end == '\0' && end != field.c_str()) {
        return value;
    }
    return field;
}

void require_rectangular(const Table& table, const char* op) {
    for (const Row& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::invalid_argument(std::string(op) +
                                        ": row width differs from header");
        }
    }
}

std::vector<std::pair<std::string, bool>> split_csv_record(const std::string& text,
                                                           std::size_t& pos) {
    std::vector<std::pair<std::string, bool>> fields;
    std::string current;
    bool quoted = false;
    bool in_quotes = false;
    while (pos < text.size()) {
        const char c = text[pos];
        if (in_quotes) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    current += '"';
                    ++pos;
                } else {
                    in_quotes = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && current.empty()) {
            in_quotes = true;
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back(std::move(current), quoted);
            current.clear();
            quoted = false;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
                ++pos;
            }
            ++pos;
            fields.emplace_back(std::move(current), quoted);
            return fields;
        } else {
            current += c;
        }
        ++pos;
    }
    if (in_quotes) {
        throw std::invalid_argument("parse_csv: unterminated quoted field");
    }
    fields.emplace_back(std::move(current), quoted);
    return fields;
}

} // namespace

std::string emit_csv(const Table& table) {
    require_rectangular(table, "emit_csv");
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += csv_escape(table.columns[i]);
    }
    out += '\n';
    for (const Row& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += cell_to_csv(row[i]);
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_csv: empty input (header row is mandatory)");
    }
    std::size_t pos = 0;
    Table table;
    for (const auto& [field, quoted] : split_csv_record(text, pos)) {
        (void)quoted;
        table.columns.push_back(field);
    }
    while (pos < text.size()) {
        auto fields = split_csv_record(text, pos);
        if (fields.size() == 1 && fields[0].first.empty() && !fields[0].second) {
            continue; // trailing blank line
        }
        if (fields.size() != table.columns.size()) {
            throw std::invalid_argument("parse_csv: row width differs from header");
        }
        Row row;
        row.reserve(fields.size());
        for (const auto& [field, quoted] : fields) {
            row.push_back(field_to_cell(field, quoted));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string emit_json(const Table& table) {
    require_rectangular(table, "emit_json");
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Row& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        obj[table.columns[i]] = nullptr;
                    } else {
                        obj[table.columns[i]] = v;
                    }
                },
                row[i]);
        }
        doc.push_back(std::move(obj));
    }
    return doc.dump(2) + "\n";
}

Table parse_json(const std::string& text) {
    const auto doc = nlohmann::ordered_json::parse(text);
    if (!doc.is_array()) {
        throw std::invalid_argument("parse_json: expected a flat array of row objects");
    }
    Table table;
    for (const auto& obj : doc) {
        if (!obj.is_object()) {
            throw std::invalid_argument("parse_json: expected row objects");
        }
        if (table.columns.empty()) {
            for (const auto& item : obj.items()) {
                table.columns.push_back(item.key());
            }
        }
        Row row;
        row.reserve(table.columns.size());
        for (const auto& column : table.columns) {
            const auto& value = obj.at(column);
            if (value.is_null()) {
                row.emplace_back(std::monostate{});
            } else if (value.is_boolean()) {
                row.emplace_back(value.get<bool>());
            } else if (value.is_number()) {
                row.emplace_back(value.get<double>());
            } else if (value.is_string()) {
                row.emplace_back(value.get<std::string>());
            } else {
                throw std::invalid_argument("parse_json: unsupported cell type");
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace spacelike::cli
