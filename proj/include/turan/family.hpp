#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Finite set of forbidden patterns, deduplicated up to isomorphism, plus an
/// optional cycle threshold k standing for "every cycle of length >= k".
///
/// Members are stored in canonical labeling, sorted by canonical encoding,
/// so two families built in different orders compare equal.
class GraphFamily {
 public:
  GraphFamily() = default;
  explicit GraphFamily(const std::vector<SmallGraph>& members,
                       std::optional<int> cycle_threshold = std::nullopt);

  /// Adds g unless an isomorphic member exists. Returns whether it was added.
  bool add(const SmallGraph& g);
  void set_cycle_threshold(std::optional<int> k);

  const std::vector<SmallGraph>& members() const { return members_; }
  std::optional<int> cycle_threshold() const { return cycle_threshold_; }
  bool empty() const { return members_.empty() && !cycle_threshold_; }
  std::size_t size() const { return members_.size(); }

  /// graph6 of each canonical member, in stored order.
  std::vector<std::string> member_graph6() const;
  /// Stable text key: member graph6 list plus the cycle threshold.
  std::string fingerprint() const;

  friend bool operator==(const GraphFamily& a, const GraphFamily& b) {
    return a.keys_ == b.keys_ && a.cycle_threshold_ == b.cycle_threshold_;
  }

 private:
  std::vector<SmallGraph> members_;
  std::vector<std::string> keys_;
  std::optional<int> cycle_threshold_;
};

std::string describe(const GraphFamily& fam);

}  // namespace turan
