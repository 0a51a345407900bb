#include "output.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "genuskit/errors.hpp"

namespace genuskit::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ParseError("unknown format '" + name + "' (expected table, csv or json)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_csv(const Table& table) {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
    os << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return os.str();
}

std::string render_aligned(const Table& table) {
  std::vector<std::size_t> width(table.columns.size(), 0);
  auto widen = [&width](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  widen(table.columns);
  for (const auto& row : table.rows) widen(row);
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
    }
    os << s << '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return os.str();
}

std::string render(const Document& doc, Format format) {
  switch (format) {
    case Format::csv:
      return render_csv(doc.table);
    case Format::json: {
      nlohmann::json j = doc.body;
      j["schema"] = doc.schema;
      return j.dump(2) + "\n";
    }
    case Format::table:
      break;
  }
  return doc.text ? *doc.text : render_aligned(doc.table);
}

void emit(const std::string& bytes, const std::string& path) {
  if (path.empty()) {
    std::cout << bytes << std::flush;
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << bytes;
  out.close();
  if (!out) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace genuskit::cli
