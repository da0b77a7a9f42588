#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tamegraph {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Scalars then tables, both rendered in insertion order.  All cells are
// preformatted strings, so a rerun of the same job is byte-identical.
struct Report {
  std::vector<std::pair<std::string, std::string>> scalars;
  std::vector<Table> tables;

  void add(std::string key, std::string value);
  Table& table(std::string name, std::vector<std::string> columns);
};

// Scalars as "# key: value" preamble lines, then each table as a "# table:"
// marker, a header row, and RFC-quoted comma-separated rows.
std::string render_csv(const Report& rep);

// Structured tree (YAML) with the same content.
std::string render_tree(const Report& rep);

std::string render_report(const Report& rep, const std::string& format);

// Empty path writes to stdout.
void write_report(const Report& rep, const std::string& format, const std::string& out_path);

}  // namespace tamegraph
