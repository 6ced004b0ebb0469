#include "turan/family.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/canonical.hpp"
#include "turan/graph6.hpp"

namespace turan {

GraphFamily::GraphFamily(const std::vector<SmallGraph>& members, std::optional<int> cycle_threshold) {
  for (const auto& g : members) add(g);
  set_cycle_threshold(cycle_threshold);
}

bool GraphFamily::add(const SmallGraph& g) {
  CanonicalForm cf = canonical_form(g);
  std::string key = cf.key();
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it != keys_.end() && *it == key) return false;
  auto pos = it - keys_.begin();
  keys_.insert(it, std::move(key));
  members_.insert(members_.begin() + pos, g.relabeled(cf.perm));
  return true;
}

void GraphFamily::set_cycle_threshold(std::optional<int> k) {
  if (k && *k < 3) throw std::invalid_argument("cycle threshold must be at least 3");
  cycle_threshold_ = k;
}

std::vector<std::string> GraphFamily::member_graph6() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (const auto& g : members_) out.push_back(graph6_encode(g));
  return out;
}

std::string GraphFamily::fingerprint() const {
  std::string out = "[";
  bool first = true;
  for (const auto& s : member_graph6()) {
    if (!first) out += ",";
    out += s;
    first = false;
  }
  out += "]";
  out += cycle_threshold_ ? ";C>=" + std::to_string(*cycle_threshold_) : std::string(";-");
  return out;
}

std::string describe(const GraphFamily& fam) {
  std::string out = "{";
  bool first = true;
  if (fam.cycle_threshold()) {
    out += "C>=" + std::to_string(*fam.cycle_threshold());
    first = false;
  }
  for (const auto& g : fam.members()) {
    out += first ? "" : ", ";
    out += "g6:" + graph6_encode(g) + "(n=" + std::to_string(g.order()) + ",e=" + std::to_string(g.size()) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace turan
