#include "turan/cache.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "turan/graph6.hpp"

namespace turan {

using nlohmann::json;

std::string record_to_json_line(const ExRecord& rec) {
  json j;
  j["key"] = rec.key();
  j["n"] = rec.n;
  j["family"] = rec.family;
  j["cycle_threshold"] = rec.cycle_threshold ? json(*rec.cycle_threshold) : json(nullptr);
  j["constraint"] = {{"connectivity", to_string(rec.constraint.connectivity)},
                     {"want_witnesses", rec.constraint.want_witnesses},
                     {"witness_cap", rec.constraint.witness_cap}};
  j["value"] = rec.value ? json(*rec.value) : json(nullptr);
  json w = json::array();
  for (const auto& g : rec.witnesses) w.push_back(graph6_encode(g));
  j["witnesses"] = w;
  j["truncated"] = rec.truncated;
  j["nodes"] = rec.nodes;
  j["ms"] = rec.ms;
  return j.dump();
}

ExRecord record_from_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
    ExRecord rec;
    rec.n = j.at("n").get<int>();
    rec.family = j.at("family").get<std::vector<std::string>>();
    if (!j.at("cycle_threshold").is_null()) rec.cycle_threshold = j.at("cycle_threshold").get<int>();
    const json& c = j.at("constraint");
    rec.constraint.connectivity = connectivity_from_string(c.at("connectivity").get<std::string>());
    rec.constraint.want_witnesses = c.at("want_witnesses").get<bool>();
    rec.constraint.witness_cap = c.at("witness_cap").get<std::size_t>();
    if (!j.at("value").is_null()) rec.value = j.at("value").get<int>();
    for (const auto& s : j.at("witnesses")) rec.witnesses.push_back(graph6_decode(s.get<std::string>()));
    rec.truncated = j.at("truncated").get<bool>();
    rec.nodes = j.at("nodes").get<std::uint64_t>();
    rec.ms = j.at("ms").get<double>();
    if (j.at("key").get<std::string>() != rec.key()) throw std::invalid_argument("key does not match record fields");
    return rec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad cache record: ") + e.what());
  }
}

std::optional<ExRecord> ResultCache::lookup(const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<ExRecord> found;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      ExRecord rec = record_from_json_line(line);
      if (rec.key() == key) found = std::move(rec);
    } catch (const std::exception& e) {
      std::cerr << "warning: " << path_ << ":" << lineno << ": skipping corrupt cache line (" << e.what() << ")\n";
    }
  }
  return found;
}

void ResultCache::store(const ExRecord& rec) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot open cache file " + path_);
  out << record_to_json_line(rec) << '\n';
}

}  // namespace turan
