#include "emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace cutreg::cli {

void Table::add_row(std::vector<std::optional<double>> row) {
  if (row.size() != columns.size()) throw std::logic_error("table row width mismatch");
  rows.push_back(std::move(row));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    os << (c ? "," : "") << table.columns[c];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ',';
      if (row[c]) os << format_number(*row[c]);
    }
    os << '\n';
  }
}

void write_json(const Document& doc, std::ostream& os) {
  Json out = doc.meta;
  Json data = Json::object();
  for (std::size_t c = 0; c < doc.table.columns.size(); ++c) {
    Json column = Json::array();
    for (const auto& row : doc.table.rows) {
      if (row[c] && std::isfinite(*row[c])) {
        column.push_back(*row[c]);
      } else {
        column.push_back(nullptr);
      }
    }
    data[doc.table.columns[c]] = std::move(column);
  }
  out["data"] = std::move(data);
  os << out.dump(2) << '\n';
}

void write_document(const Document& doc, Format format, std::ostream& os) {
  if (format == Format::csv) {
    write_csv(doc.table, os);
  } else {
    write_json(doc, os);
  }
}

}  // namespace cutreg::cli
