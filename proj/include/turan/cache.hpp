#pragma once

#include <mutex>
#include <optional>
#include <string>

#include "turan/oracle.hpp"

namespace turan {

/// One JSON object per line:
/// {key, n, family, cycle_threshold, constraint, value, witnesses, truncated, nodes, ms}.
std::string record_to_json_line(const ExRecord& rec);
/// Throws std::invalid_argument on a malformed line.
ExRecord record_from_json_line(const std::string& line);

/// Append-only file of ExRecords. Unparseable lines are skipped with a
/// warning on stderr; a later line with the same key wins.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  std::optional<ExRecord> lookup(const std::string& key) const;
  void store(const ExRecord& rec);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  mutable std::mutex mutex_;
};

}  // namespace turan
