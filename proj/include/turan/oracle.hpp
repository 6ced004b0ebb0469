#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "turan/family.hpp"
#include "turan/graph.hpp"

namespace turan {

class ResultCache;

inline constexpr std::uint64_t kDefaultOracleBudget = 4'000'000'000ULL;
inline constexpr std::size_t kDefaultWitnessCap = 1000;

enum class Connectivity { kAny, kConnected, kTwoConnected };

std::string to_string(Connectivity c);
Connectivity connectivity_from_string(const std::string& s);

struct SearchConstraint {
  Connectivity connectivity = Connectivity::kAny;
  bool want_witnesses = true;
  std::uint64_t node_budget = kDefaultOracleBudget;
  std::size_t witness_cap = kDefaultWitnessCap;
};

/// Outcome of one ex(n, F) query.
struct ExRecord {
  int n = 0;
  std::vector<std::string> family;  ///< canonical members as graph6
  std::optional<int> cycle_threshold;
  SearchConstraint constraint;
  std::optional<int> value;          ///< nullopt: no graph meets the constraint
  std::vector<SmallGraph> witnesses; ///< EX(n, F) up to isomorphism, canonical labels
  bool truncated = false;
  std::uint64_t nodes = 0;
  double ms = 0;

  std::string key() const;
};

/// Cache key: order, family fingerprint, connectivity, witness settings.
std::string query_key(int n, const GraphFamily& fam, const SearchConstraint& c);

struct OracleOptions {
  int workers = 1;
  /// JSON-lines result cache; nullopt disables it.
  std::optional<std::string> cache_path;
  /// Ceiling on every query's node budget.
  std::uint64_t node_budget = kDefaultOracleBudget;

  /// workers from hardware, cache path from TURAN_CACHE, budget from TURAN_BUDGET.
  static OracleOptions from_env();
};

/// Exact Turán numbers by isomorph-free generation of F-free graphs.
///
/// Graphs are grown one vertex at a time: a child of P is P plus a new vertex
/// whose degree is minimum in the child, so every graph is reached from some
/// graph one vertex smaller. The new vertex's neighbourhood is chosen
/// vertex by vertex and each added edge is checked only for copies of a
/// forbidden pattern (or a long cycle) through that edge. Each level keeps
/// one canonical representative per isomorphism class.
///
/// For a target edge count L, a graph on m vertices is pruned when no
/// sequence of minimum-degree vertex additions can lift it to L edges at
/// order n. Queries try L from an upper cap downwards until a graph is found,
/// so the successful pass keeps every extremal graph.
class ExOracle {
 public:
  explicit ExOracle(OracleOptions options = {});
  ~ExOracle();
  ExOracle(const ExOracle&) = delete;
  ExOracle& operator=(const ExOracle&) = delete;

  ExRecord ex_exact(int n, const GraphFamily& fam, const SearchConstraint& constraint = {});
  std::vector<SmallGraph> extremal_graphs(int n, const GraphFamily& fam, SearchConstraint constraint = {});

  /// Every F-free graph on n vertices, one per isomorphism class, in
  /// canonical labeling and canonical-encoding order.
  std::vector<SmallGraph> free_graphs(int n, const GraphFamily& fam,
                                      std::uint64_t node_budget = kDefaultOracleBudget);

  int workers() const { return options_.workers; }
  void set_workers(int w) { options_.workers = w; }

 private:
  ExRecord compute(int n, const GraphFamily& fam, const SearchConstraint& constraint);

  OracleOptions options_;
  std::map<std::string, ExRecord> memo_;
  std::unique_ptr<ResultCache> cache_;
};

/// Graph decoded from a canonical encoding (order byte plus packed upper triangle).
SmallGraph graph_from_encoding(const std::string& bytes);

}  // namespace turan
