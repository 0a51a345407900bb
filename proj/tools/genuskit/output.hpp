#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace genuskit::cli {

enum class Format { table, csv, json };

Format parse_format(const std::string& name);

// Thrown for option combinations that cannot be honoured together.
class ContradictoryOptions : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// What a subcommand produces. `text` replaces the aligned table in table
// format when set.
struct Document {
  std::string schema;  // e.g. "genuskit.count/1"
  nlohmann::json body = nlohmann::json::object();
  Table table;
  std::optional<std::string> text;
};

std::string render(const Document& doc, Format format);
std::string render_csv(const Table& table);
std::string render_aligned(const Table& table);

// Writes to stdout when `path` is empty. Throws IoError.
void emit(const std::string& bytes, const std::string& path);

}  // namespace genuskit::cli
