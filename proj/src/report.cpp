#include "gic/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "gic/csv.hpp"

namespace gic {

namespace csv {

std::string fixed6(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(std::string_view cell) {
  if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

}  // namespace csv

ReportRow& ReportRow::add(std::string key, Cell value) {
  if (find(key) != nullptr) throw std::invalid_argument("duplicate report key: " + key);
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const Cell* ReportRow::find(std::string_view key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  return std::nullopt;
}

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(double d) const { return csv::fixed6(d); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(long long n) const { return std::to_string(n); }
  };
  return std::visit(Visitor{}, cell);
}

std::string to_csv(std::span<const ReportRow> rows) {
  if (rows.empty()) return "";
  std::string out;
  const auto& head = rows.front().fields();
  for (size_t i = 0; i < head.size(); ++i) {
    if (i) out += ',';
    out += csv::escape(head[i].first);
  }
  out += '\n';
  for (const auto& row : rows) {
    const auto& f = row.fields();
    if (f.size() != head.size()) throw std::invalid_argument("csv rows have different columns");
    for (size_t i = 0; i < f.size(); ++i) {
      if (f[i].first != head[i].first) throw std::invalid_argument("csv rows have different columns");
      if (i) out += ',';
      out += csv::escape(format_cell(f[i].second));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(std::span<const ReportRow> rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, cell] : row.fields()) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[key] = nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
              // JSON has no inf/nan; emit null instead.
              if (std::isfinite(v)) obj[key] = v; else obj[key] = nullptr;
            } else {
              obj[key] = v;
            }
          },
          cell);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render(std::span<const ReportRow> rows, OutputFormat format) {
  return format == OutputFormat::Csv ? to_csv(rows) : to_json(rows);
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool first = true;
  size_t pos = 0;
  while (pos < text.size()) {
    // A quoted cell may span lines; find the record end outside quotes.
    size_t end = pos;
    bool quoted = false;
    while (end < text.size() && (quoted || text[end] != '\n')) {
      if (text[end] == '"') quoted = !quoted;
      ++end;
    }
    auto line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto cells = csv::split_line(line);
    if (first) {
      table.header = std::move(cells);
      first = false;
    } else {
      table.rows.push_back(std::move(cells));
    }
    pos = end + 1;
  }
  return table;
}

std::string to_csv(const CsvTable& table) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv::escape(cells[i]);
    }
    out += '\n';
  };
  if (table.header.empty() && table.rows.empty()) return out;
  emit(table.header);
  for (const auto& r : table.rows) emit(r);
  return out;
}

}  // namespace gic
