#pragma once

// Tabular records shared by every subcommand. CSV: comma separated, header
// row, LF endings, doubles with 17 significant digits. JSON wraps the same
// records together with the command's configuration.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qwalk {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, json };

// "%.17g"; parsing the text with strtod gives back the same bits.
std::string format_double(double value);

void write_csv(std::ostream& out, const Table& table);

void write_json(std::ostream& out, const std::string& command, const nlohmann::json& config,
                const Table& table);

}  // namespace qwalk
