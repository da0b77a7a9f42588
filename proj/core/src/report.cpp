#include "tamegraph/report.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace tamegraph {

void Report::add(std::string key, std::string value) {
  scalars.emplace_back(std::move(key), std::move(value));
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back({std::move(name), std::move(columns), {}});
  return tables.back();
}

namespace {

std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void csv_row(std::ostringstream& os, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) os << ',';
    os << csv_cell(cells[k]);
  }
  os << '\n';
}

}  // namespace

std::string render_csv(const Report& rep) {
  std::ostringstream os;
  for (const auto& [key, value] : rep.scalars) os << "# " << key << ": " << value << '\n';
  for (const Table& t : rep.tables) {
    os << "# table: " << t.name << '\n';
    csv_row(os, t.columns);
    for (const auto& row : t.rows) csv_row(os, row);
  }
  return os.str();
}

std::string render_tree(const Report& rep) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  for (const auto& [key, value] : rep.scalars) out << YAML::Key << key << YAML::Value << value;
  if (!rep.tables.empty()) {
    out << YAML::Key << "tables" << YAML::Value << YAML::BeginSeq;
    for (const Table& t : rep.tables) {
      out << YAML::BeginMap;
      out << YAML::Key << "name" << YAML::Value << t.name;
      out << YAML::Key << "columns" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (const auto& c : t.columns) out << c;
      out << YAML::EndSeq;
      out << YAML::Key << "rows" << YAML::Value << YAML::BeginSeq;
      for (const auto& row : t.rows) {
        out << YAML::Flow << YAML::BeginSeq;
        for (const auto& cell : row) out << cell;
        out << YAML::EndSeq;
      }
      out << YAML::EndSeq;
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

std::string render_report(const Report& rep, const std::string& format) {
  if (format == "csv") return render_csv(rep);
  if (format == "tree") return render_tree(rep);
  throw std::invalid_argument("unknown report format: " + format);
}

void write_report(const Report& rep, const std::string& format, const std::string& out_path) {
  std::string text = render_report(rep, format);
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
}

}  // namespace tamegraph
