#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace leibcoh::cli {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<long long>> rows;

  bool operator==(const Table&) const = default;
};

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  std::string provenance;
  bool pass = false;

  bool operator==(const Check&) const = default;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> job;
  std::string field;
  std::size_t degrees = 0;
  std::vector<Table> tables;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::optional<double> wall_ms;  // only with --timing, so reruns stay byte-identical

  bool passed() const;
  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
// ParseError when the document does not have the report shape.
Report report_from_json(const nlohmann::json& j);

enum class Format { text, csv, json };
void write_report(std::ostream& os, const Report& r, Format f);

}  // namespace leibcoh::cli
