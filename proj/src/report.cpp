#include "turan/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace turan {

using nlohmann::ordered_json;

void VerificationReport::add_counter(const std::string& name, std::uint64_t amount) {
  for (auto& [key, value] : counters) {
    if (key == name) {
      value += amount;
      return;
    }
  }
  counters.emplace_back(name, amount);
}

std::uint64_t VerificationReport::counter(const std::string& name) const {
  for (const auto& [key, value] : counters) {
    if (key == name) return value;
  }
  return 0;
}

ReportFormat report_format_from_string(const std::string& s) {
  if (s == "json") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  if (s == "markdown" || s == "md") return ReportFormat::kMarkdown;
  throw std::invalid_argument("unknown report format '" + s + "'");
}

namespace {

ordered_json pairs_to_json(const KeyValues& kv) {
  ordered_json j = ordered_json::array();
  for (const auto& [k, v] : kv) j.push_back({k, v});
  return j;
}

KeyValues pairs_from_json(const ordered_json& j) {
  KeyValues out;
  for (const auto& p : j) out.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  return out;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["target"] = r.target;
  j["pass"] = r.pass();
  j["parameters"] = pairs_to_json(r.parameters);
  j["instances_tested"] = r.instances_tested;
  ordered_json counters = ordered_json::array();
  for (const auto& [k, v] : r.counters) counters.push_back({k, v});
  j["counters"] = counters;
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json o;
    o["check"] = v.check;
    o["witness"] = v.witness;
    o["cycle"] = v.cycle;
    o["params"] = pairs_to_json(v.params);
    o["lhs"] = v.lhs;
    o["rhs"] = v.rhs;
    violations.push_back(o);
  }
  j["violations"] = violations;
  ordered_json tables = ordered_json::array();
  for (const auto& t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["tables"] = tables;
  j["conclusions"] = pairs_to_json(r.conclusions);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_cycle(const std::vector<int>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s;
}

std::string join_params(const KeyValues& kv) {
  std::string s;
  for (std::size_t i = 0; i < kv.size(); ++i) s += (i ? ";" : "") + kv[i].first + "=" + kv[i].second;
  return s;
}

std::string emit_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "section,key,value\n";
  os << "report,target," << csv_field(r.target) << "\n";
  os << "report,pass," << (r.pass() ? "true" : "false") << "\n";
  os << "report,instances_tested," << r.instances_tested << "\n";
  for (const auto& [k, v] : r.parameters) os << "parameter," << csv_field(k) << "," << csv_field(v) << "\n";
  for (const auto& [k, v] : r.counters) os << "counter," << csv_field(k) << "," << v << "\n";
  for (const auto& [k, v] : r.conclusions) os << "conclusion," << csv_field(k) << "," << csv_field(v) << "\n";
  for (const auto& t : r.tables) {
    os << "\ntable," << csv_field(t.name) << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\n";
    }
  }
  os << "\nviolations\ncheck,witness,cycle,params,lhs,rhs\n";
  for (const auto& v : r.violations) {
    os << csv_field(v.check) << "," << csv_field(v.witness) << "," << csv_field(join_cycle(v.cycle)) << ","
       << csv_field(join_params(v.params)) << "," << csv_field(v.lhs) << "," << csv_field(v.rhs) << "\n";
  }
  return os.str();
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string emit_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# " << r.target << "\n\n";
  os << "- result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  os << "- instances tested: " << r.instances_tested << "\n";
  os << "- violations: " << r.violations.size() << "\n";
  if (!r.parameters.empty()) {
    os << "\n## Parameters\n\n";
    for (const auto& [k, v] : r.parameters) os << "- " << k << ": `" << v << "`\n";
  }
  if (!r.counters.empty()) {
    os << "\n## Counters\n\n";
    for (const auto& [k, v] : r.counters) os << "- " << k << ": " << v << "\n";
  }
  for (const auto& t : r.tables) {
    os << "\n## " << t.name << "\n\n|";
    for (const auto& c : t.columns) os << " " << md_cell(c) << " |";
    os << "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : t.rows) {
      os << "|";
      for (const auto& cell : row) os << " " << md_cell(cell) << " |";
      os << "\n";
    }
  }
  os << "\n## Violations\n\n| check | witness | cycle | params | lhs | rhs |\n|---|---|---|---|---|---|\n";
  for (const auto& v : r.violations) {
    os << "| " << md_cell(v.check) << " | `" << md_cell(v.witness) << "` | " << join_cycle(v.cycle) << " | "
       << md_cell(join_params(v.params)) << " | " << v.lhs << " | " << v.rhs << " |\n";
  }
  if (!r.conclusions.empty()) {
    os << "\n## Conclusions\n\n";
    for (const auto& [k, v] : r.conclusions) os << "- " << k << ": " << v << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return to_json(report).dump(2) + "\n";
    case ReportFormat::kCsv:
      return emit_csv(report);
    case ReportFormat::kMarkdown:
      return emit_markdown(report);
  }
  return {};
}

VerificationReport report_from_json(const std::string& text) {
  try {
    const ordered_json j = ordered_json::parse(text);
    VerificationReport r;
    r.target = j.at("target").get<std::string>();
    r.parameters = pairs_from_json(j.at("parameters"));
    r.instances_tested = j.at("instances_tested").get<std::uint64_t>();
    for (const auto& c : j.at("counters")) r.counters.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::uint64_t>());
    for (const auto& o : j.at("violations")) {
      Violation v;
      v.check = o.at("check").get<std::string>();
      v.witness = o.at("witness").get<std::string>();
      v.cycle = o.at("cycle").get<std::vector<int>>();
      v.params = pairs_from_json(o.at("params"));
      v.lhs = o.at("lhs").get<std::string>();
      v.rhs = o.at("rhs").get<std::string>();
      r.violations.push_back(std::move(v));
    }
    for (const auto& t : j.at("tables")) {
      ReportTable table;
      table.name = t.at("name").get<std::string>();
      table.columns = t.at("columns").get<std::vector<std::string>>();
      table.rows = t.at("rows").get<std::vector<std::vector<std::string>>>();
      r.tables.push_back(std::move(table));
    }
    r.conclusions = pairs_from_json(j.at("conclusions"));
    if (j.contains("pass") && j.at("pass").get<bool>() != r.pass()) {
      throw std::invalid_argument("pass flag disagrees with violations");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad report: ") + e.what());
  }
}

}  // namespace turan
