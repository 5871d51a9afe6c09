#pragma once

// Tabular output shared by the CLI: ordered rows rendered as CSV (6 decimals)
// or JSON (full precision).

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gic {

using Cell = std::variant<std::monostate, std::string, double, bool, long long>;

class ReportRow {
 public:
  /// Appends a field; throws std::invalid_argument on a duplicate key.
  ReportRow& add(std::string key, Cell value);

  const std::vector<std::pair<std::string, Cell>>& fields() const { return fields_; }
  const Cell* find(std::string_view key) const;

 private:
  std::vector<std::pair<std::string, Cell>> fields_;
};

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

std::string format_cell(const Cell& cell);

/// Header from the first row; every row must carry the same keys in order.
std::string to_csv(std::span<const ReportRow> rows);

/// JSON array of objects with keys in row order.
std::string to_json(std::span<const ReportRow> rows);

std::string render(std::span<const ReportRow> rows, OutputFormat format);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable parse_csv(std::string_view text);
std::string to_csv(const CsvTable& table);

}  // namespace gic
