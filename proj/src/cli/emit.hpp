#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cutreg::cli {

using Json = nlohmann::ordered_json;

/// Column-major numeric table; missing cells print empty in CSV and null in JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  void add_row(std::vector<std::optional<double>> row);
};

struct Document {
  Json meta = Json::object();
  Table table;
};

enum class Format { csv, json };

/// Shortest text that reads back to the same double.
std::string format_number(double x);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Document& doc, std::ostream& os);
void write_document(const Document& doc, Format format, std::ostream& os);

}  // namespace cutreg::cli
