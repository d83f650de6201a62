#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "leibcoh/errors.hpp"

namespace leibcoh::cli {

using nlohmann::json;

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  json job = json::array();
  for (const auto& [k, v] : r.job) job.push_back({k, v});
  j["job"] = job;
  j["field"] = r.field;
  j["degrees"] = r.degrees;
  json tables = json::array();
  for (const Table& t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["tables"] = tables;
  json checks = json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"provenance", c.provenance},
                      {"pass", c.pass}});
  j["checks"] = checks;
  j["notes"] = r.notes;
  if (r.wall_ms) j["wall_ms"] = *r.wall_ms;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    for (const json& p : j.at("job")) r.job.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    r.field = j.at("field").get<std::string>();
    r.degrees = j.at("degrees").get<std::size_t>();
    for (const json& t : j.at("tables"))
      r.tables.push_back({t.at("name").get<std::string>(), t.at("columns").get<std::vector<std::string>>(),
                          t.at("rows").get<std::vector<std::vector<long long>>>()});
    for (const json& c : j.at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                          c.at("actual").get<std::string>(), c.at("provenance").get<std::string>(),
                          c.at("pass").get<bool>()});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
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

void write_text(std::ostream& os, const Report& r) {
  os << r.command << "\n";
  for (const auto& [k, v] : r.job) os << "  " << k << ": " << v << "\n";
  os << "  field: " << r.field << "\n";
  for (const Table& t : r.tables) {
    os << "\n" << t.name << "\n";
    std::vector<std::size_t> w(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      w[c] = t.columns[c].size();
      for (const auto& row : t.rows) w[c] = std::max(w[c], std::to_string(row[c]).size());
    }
    for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "  " : "") << std::setw(static_cast<int>(w[c])) << t.columns[c];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "  " : "") << std::setw(static_cast<int>(w[c])) << row[c];
      os << "\n";
    }
  }
  if (!r.checks.empty()) os << "\n";
  for (const Check& c : r.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected << ", got " << c.actual;
    if (!c.provenance.empty()) os << "  [" << c.provenance << "]";
    os << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  if (r.wall_ms) os << "wall time: " << std::fixed << std::setprecision(1) << *r.wall_ms << " ms\n";
}

void write_csv(std::ostream& os, const Report& r) {
  bool first = true;
  for (const Table& t : r.tables) {
    if (!first) os << "\n";
    first = false;
    os << "table";
    for (const auto& c : t.columns) os << "," << csv_field(c);
    os << "\n";
    for (const auto& row : t.rows) {
      os << csv_field(t.name);
      for (long long v : row) os << "," << v;
      os << "\n";
    }
  }
  if (!r.checks.empty()) {
    if (!first) os << "\n";
    os << "check,expected,actual,provenance,result\n";
    for (const Check& c : r.checks)
      os << csv_field(c.name) << "," << csv_field(c.expected) << "," << csv_field(c.actual) << ","
         << csv_field(c.provenance) << "," << (c.pass ? "PASS" : "FAIL") << "\n";
  }
}

}  // namespace

void write_report(std::ostream& os, const Report& r, Format f) {
  switch (f) {
    case Format::text:
      write_text(os, r);
      break;
    case Format::csv:
      write_csv(os, r);
      break;
    case Format::json:
      os << to_json(r).dump(2) << "\n";
      break;
  }
}

}  // namespace leibcoh::cli
