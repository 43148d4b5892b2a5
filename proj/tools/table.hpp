#pragma once

#include <string>
#include <variant>
#include <vector>

namespace spacelike::cli {

/**
 * One table cell: empty (serialised as an empty CSV field / JSON null),
 * boolean, double, or string. Doubles are emitted with 17 significant
 * digits so that parse(emit(table)) reproduces the table exactly.
 */
using Cell = std::variant<std::monostate, bool, double, std::string>;
using Row = std::vector<Cell>;

struct Table {
    std::vector<std::string> columns;
    std::vector<Row> rows;

    bool operator==(const Table&) const = default;
};

/// RFC-4180-style CSV with a mandatory header row and "\n" line ends.
[[nodiscard]] std::string emit_csv(const Table& table);
[[nodiscard]] Table parse_csv(const std::string& text);

/// Flat JSON array of row objects keyed by the column names.
[[nodiscard]] std::string emit_json(const Table& table);
[[nodiscard]] Table parse_json(const std::string& text);

} // namespace spacelike::cli
