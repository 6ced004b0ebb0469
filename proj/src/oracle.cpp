#include "turan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "turan/cache.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"
#include "turan/parallel.hpp"
#include "turan/structure.hpp"

namespace turan {

std::string to_string(Connectivity c) {
  switch (c) {
    case Connectivity::kAny:
      return "any";
    case Connectivity::kConnected:
      return "connected";
    case Connectivity::kTwoConnected:
      return "two_connected";
  }
  return "any";
}

Connectivity connectivity_from_string(const std::string& s) {
  if (s == "any") return Connectivity::kAny;
  if (s == "connected") return Connectivity::kConnected;
  if (s == "two_connected") return Connectivity::kTwoConnected;
  throw std::invalid_argument("unknown connectivity '" + s + "'");
}

namespace {

std::string key_for(int n, const std::string& fingerprint, const SearchConstraint& c) {
  std::ostringstream os;
  os << "n=" << n << ";F=" << fingerprint << ";conn=" << to_string(c.connectivity)
     << ";wit=" << (c.want_witnesses ? c.witness_cap : 0);
  return os.str();
}

std::string record_fingerprint(const ExRecord& rec) {
  std::string s = "[";
  for (std::size_t i = 0; i < rec.family.size(); ++i) {
    if (i) s += ',';
    s += rec.family[i];
  }
  s += "];";
  s += rec.cycle_threshold ? "C>=" + std::to_string(*rec.cycle_threshold) : "-";
  return s;
}

bool meets(const SmallGraph& g, Connectivity c) {
  switch (c) {
    case Connectivity::kAny:
      return true;
    case Connectivity::kConnected:
      return is_connected(g);
    case Connectivity::kTwoConnected:
      return is_two_connected(g);
  }
  return true;
}

int min_edges_for(int n, Connectivity c) {
  switch (c) {
    case Connectivity::kAny:
      return 0;
    case Connectivity::kConnected:
      return n - 1;
    case Connectivity::kTwoConnected:
      return n;
  }
  return 0;
}

// Forbidden structure prepared for incremental checks.
struct Forbidden {
  std::optional<int> k;
  std::vector<PatternMatcher> edge_checks;       // members with an edge
  std::vector<PatternMatcher> vertex_checks;     // member minus one isolated vertex
  int smallest_edgeless = SmallGraph::kMaxVertices + 1;

  explicit Forbidden(const GraphFamily& fam) : k(fam.cycle_threshold()) {
    for (const auto& m : fam.members()) {
      if (m.order() == 0) throw std::invalid_argument("family member with no vertices");
      if (m.size() == 0) {
        smallest_edgeless = std::min(smallest_edgeless, m.order());
        continue;
      }
      edge_checks.emplace_back(m);
      for (int x = 0; x < m.order(); ++x) {
        if (m.degree(x) == 0) {
          vertex_checks.emplace_back(remove_vertices(m, bit(x)), false);
          break;
        }
      }
    }
  }

  bool free(const SmallGraph& g) const {
    if (g.order() >= smallest_edgeless) return false;
    for (const auto& pm : edge_checks) {
      if (pm.occurs_in(g)) return false;
    }
    return !(k && has_cycle_geq(g, *k));
  }
};

// mask[a]: vertices b joined to a by a path on at least `need` vertices.
std::vector<Bits> long_path_masks(const SmallGraph& g, int need) {
  const int n = g.order();
  std::vector<Bits> mask(n, 0);
  for (int a = 0; a < n; ++a) {
    const Bits targets = g.vertices() & ~low_bits(a + 1);
    auto dfs = [&](auto&& self, int cur, Bits visited, int len) -> void {
      if (len >= need) mask[a] |= bit(cur);
      const Bits open = reachable(g, cur, (g.vertices() & ~visited) | bit(cur)) & ~bit(cur);
      if (len + popcount(open) < need) return;
      if ((open & targets & ~mask[a]) == 0) return;
      for_each_bit(g.neighbors(cur) & ~visited, [&](int w) { self(self, w, visited | bit(w), len + 1); });
    };
    dfs(dfs, a, bit(a), 1);
    mask[a] &= targets;
  }
  for (int a = 0; a < n; ++a) {
    for_each_bit(mask[a], [&](int b) { mask[b] |= bit(a); });
  }
  return mask;
}

// Upper estimate of the edge count at order n reachable from a graph with e
// edges, minimum degree delta and m vertices by minimum-degree additions.
long long edge_estimate(long long e, int delta, int m, int n, const std::vector<long long>& cap) {
  long long x = e;
  long long d = delta;
  for (int j = m + 1; j <= n; ++j) {
    long long dj = std::min<long long>(j - 1, d + 1);
    if (j > 2) dj = std::min(dj, 2 * x / (j - 2));
    x = std::min(x + dj, cap[j]);
    d = dj;
  }
  return x;
}

class Generator {
 public:
  Generator(const Forbidden& forb, int n, long long target, std::vector<long long> cap,
            Connectivity conn, int workers, std::uint64_t budget)
      : forb_(forb), n_(n), target_(target), cap_(std::move(cap)), conn_(conn), workers_(workers), budget_(budget) {}

  // Canonical encodings of the surviving graphs at order n.
  std::vector<std::string> run() {
    std::vector<std::string> level;
    if (n_ < forb_.smallest_edgeless && edge_estimate(0, 0, 1, n_, cap_) >= target_) {
      level.push_back(canonical_form(SmallGraph(1)).key());
    }
    for (int m = 1; m < n_ && !level.empty(); ++m) level = extend(level, m);
    return level;
  }

  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::vector<std::string> extend(const std::vector<std::string>& level, int m) {
    std::vector<std::vector<std::string>> slots(level.size());
    parallel_for(level.size(), workers_, [&](std::size_t i) { slots[i] = children(graph_from_encoding(level[i]), m); });
    std::size_t total = 0;
    for (const auto& s : slots) total += s.size();
    std::vector<std::string> next;
    next.reserve(total);
    for (auto& s : slots) {
      for (auto& key : s) next.push_back(std::move(key));
      s.clear();
      s.shrink_to_fit();
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    return next;
  }

  std::vector<std::string> children(const SmallGraph& parent, int m) {
    std::vector<std::string> out;
    for (const auto& pm : forb_.vertex_checks) {
      if (pm.occurs_in(parent)) return out;
    }
    const int v = m;
    const bool last = m + 1 == n_;
    const int e = parent.size();
    const int pmin = m == 0 ? 0 : parent.min_degree();

    std::vector<Bits> longmask;
    if (forb_.k && m + 1 >= *forb_.k) longmask = long_path_masks(parent, *forb_.k - 1);

    const int dmax = std::min(m, pmin + 1);
    int dmin = 0;
    if (last && conn_ == Connectivity::kConnected) dmin = 1;
    if (last && conn_ == Connectivity::kTwoConnected) dmin = 2;
    while (dmin <= dmax && edge_estimate(e + dmin, dmin, m + 1, n_, cap_) < target_) ++dmin;

    SmallGraph child = parent;
    child.add_vertex();
    for (int d = dmin; d <= dmax; ++d) {
      Bits forced = 0;
      Bits optional = 0;
      for (int u = 0; u < m; ++u) {
        if (parent.degree(u) == d - 1) forced |= bit(u);
        else optional |= bit(u);
      }
      if (popcount(forced) > d) continue;
      Bits chosen = 0;
      bool ok = true;
      for_each_bit(forced, [&](int u) {
        if (ok) ok = add_neighbor(child, v, u, chosen, longmask);
      });
      if (ok) choose(child, v, optional, d - popcount(forced), chosen, longmask, out);
      for_each_bit(chosen, [&](int u) { child.remove_edge(v, u); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Adds edge vu when it creates no forbidden copy; records u in `chosen`.
  bool add_neighbor(SmallGraph& child, int v, int u, Bits& chosen, const std::vector<Bits>& longmask) {
    count_node();
    if (!longmask.empty() && (longmask[u] & chosen)) return false;
    child.add_edge(v, u);
    for (const auto& pm : forb_.edge_checks) {
      if (pm.occurs_through_edge(child, v, u)) {
        child.remove_edge(v, u);
        return false;
      }
    }
    chosen |= bit(u);
    return true;
  }

  void choose(SmallGraph& child, int v, Bits pool, int remaining, Bits& chosen, const std::vector<Bits>& longmask,
              std::vector<std::string>& out) {
    if (remaining == 0) {
      if (n_ == child.order() && !meets(child, conn_)) return;
      out.push_back(canonical_form(child).key());
      return;
    }
    while (popcount(pool) >= remaining) {
      const int u = lowest(pool);
      pool &= pool - 1;
      if (!add_neighbor(child, v, u, chosen, longmask)) continue;
      choose(child, v, pool, remaining - 1, chosen, longmask, out);
      child.remove_edge(v, u);
      chosen &= ~bit(u);
    }
  }

  void count_node() {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) {
      throw BudgetExceeded("oracle node budget exhausted");
    }
  }

  const Forbidden& forb_;
  int n_;
  long long target_;
  std::vector<long long> cap_;
  Connectivity conn_;
  int workers_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t> nodes_{0};
};

// Random maximal free graphs meeting the constraint; best edge count or -1.
int greedy_lower_bound(int n, const Forbidden& forb, Connectivity conn) {
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(n));
  std::vector<Edge> all;
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) all.emplace_back(a, b);
  }
  int best = -1;
  constexpr int kTries = 64;
  for (int t = 0; t < kTries; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    SmallGraph g(n);
    for (auto [a, b] : all) {
      g.add_edge(a, b);
      bool bad = forb.k && has_cycle_geq(g, *forb.k);
      for (std::size_t i = 0; !bad && i < forb.edge_checks.size(); ++i) {
        bad = forb.edge_checks[i].occurs_through_edge(g, a, b);
      }
      if (bad) g.remove_edge(a, b);
    }
    if (meets(g, conn)) best = std::max(best, g.size());
  }
  return best;
}

}  // namespace

std::string ExRecord::key() const {
  return key_for(n, record_fingerprint(*this), constraint);
}

std::string query_key(int n, const GraphFamily& fam, const SearchConstraint& c) {
  return key_for(n, fam.fingerprint(), c);
}

OracleOptions OracleOptions::from_env() {
  OracleOptions o;
  o.workers = default_workers();
  if (const char* p = std::getenv("TURAN_CACHE"); p != nullptr && *p != '\0') o.cache_path = p;
  if (const char* p = std::getenv("TURAN_BUDGET"); p != nullptr && *p != '\0') {
    o.node_budget = std::stoull(p);
    if (o.node_budget == 0) throw std::invalid_argument("TURAN_BUDGET must be positive");
  }
  return o;
}

ExOracle::ExOracle(OracleOptions options) : options_(std::move(options)) {
  if (options_.cache_path) cache_ = std::make_unique<ResultCache>(*options_.cache_path);
}

ExOracle::~ExOracle() = default;

ExRecord ExOracle::ex_exact(int n, const GraphFamily& fam, const SearchConstraint& requested) {
  SearchConstraint constraint = requested;
  constraint.node_budget = std::min(constraint.node_budget, options_.node_budget);
  if (constraint.node_budget == 0) throw std::invalid_argument("node budget must be positive");
  const std::string key = query_key(n, fam, constraint);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (cache_) {
    if (auto hit = cache_->lookup(key)) {
      memo_.emplace(key, *hit);
      return *hit;
    }
  }
  ExRecord rec = compute(n, fam, constraint);
  memo_.emplace(key, rec);
  if (cache_) cache_->store(rec);
  return rec;
}

std::vector<SmallGraph> ExOracle::extremal_graphs(int n, const GraphFamily& fam, SearchConstraint constraint) {
  constraint.want_witnesses = true;
  ExRecord rec = ex_exact(n, fam, constraint);
  if (rec.truncated) throw BudgetExceeded("extremal graph list truncated");
  return rec.witnesses;
}

std::vector<SmallGraph> ExOracle::free_graphs(int n, const GraphFamily& fam, std::uint64_t node_budget) {
  if (n < 1 || n > SmallGraph::kMaxVertices) throw CapacityError("order out of range");
  Forbidden forb(fam);
  std::vector<long long> cap(n + 1);
  for (int j = 0; j <= n; ++j) cap[j] = binom2(j);
  Generator gen(forb, n, 0, cap, Connectivity::kAny, options_.workers, std::min(node_budget, options_.node_budget));
  std::vector<SmallGraph> out;
  for (const auto& key : gen.run()) out.push_back(graph_from_encoding(key));
  return out;
}

ExRecord ExOracle::compute(int n, const GraphFamily& fam, const SearchConstraint& constraint) {
  if (n < 1 || n > SmallGraph::kMaxVertices) throw CapacityError("order out of range");
  const auto start = std::chrono::steady_clock::now();
  ExRecord rec;
  rec.n = n;
  rec.family = fam.member_graph6();
  rec.cycle_threshold = fam.cycle_threshold();
  rec.constraint = constraint;

  Forbidden forb(fam);
  auto finish = [&] {
    rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
  };
  if (n >= forb.smallest_edgeless) return finish();

  // exact unconstrained values below n bound every intermediate level
  std::vector<long long> cap(n + 1);
  for (int j = 0; j <= n; ++j) cap[j] = binom2(j);
  if (fam.cycle_threshold()) {
    for (int j = 1; j <= n; ++j) cap[j] = std::min<long long>(cap[j], erdos_gallai_cap(j, *fam.cycle_threshold()));
  }
  SearchConstraint sub;
  sub.want_witnesses = false;
  sub.node_budget = constraint.node_budget;
  for (int j = 3; j < n; ++j) {
    ExRecord r = ex_exact(j, fam, sub);
    cap[j] = std::min<long long>(cap[j], *r.value);
  }
  if (n >= 3) cap[n] = std::min<long long>(cap[n], (static_cast<long long>(n) * cap[n - 1]) / (n - 2));

  long long low = greedy_lower_bound(n, forb, constraint.connectivity);
  bool has_isolated = false;
  for (const auto& m : fam.members()) {
    for (int x = 0; x < m.order(); ++x) has_isolated = has_isolated || m.degree(x) == 0;
  }
  if (!has_isolated && constraint.connectivity == Connectivity::kAny && n >= 2) low = std::max(low, cap[n - 1]);
  const long long floor_edges = std::max<long long>(low, min_edges_for(n, constraint.connectivity));

  for (long long target = cap[n]; target >= floor_edges; --target) {
    if (rec.nodes >= constraint.node_budget) throw BudgetExceeded("oracle node budget exhausted");
    Generator gen(forb, n, target, cap, constraint.connectivity, options_.workers, constraint.node_budget - rec.nodes);
    std::vector<std::string> found = gen.run();
    rec.nodes += gen.nodes();
    std::vector<SmallGraph> graphs;
    int best = -1;
    for (const auto& key : found) {
      SmallGraph g = graph_from_encoding(key);
      if (g.size() < target) continue;
      best = std::max(best, g.size());
      graphs.push_back(std::move(g));
    }
    if (best < 0) continue;
    rec.value = best;
    if (constraint.want_witnesses) {
      for (auto& g : graphs) {
        if (g.size() != best) continue;
        if (rec.witnesses.size() == constraint.witness_cap) {
          rec.truncated = true;
          break;
        }
        rec.witnesses.push_back(std::move(g));
      }
    }
    return finish();
  }
  return finish();
}

SmallGraph graph_from_encoding(const std::string& bytes) {
  if (bytes.empty()) throw std::invalid_argument("empty encoding");
  const int n = static_cast<unsigned char>(bytes[0]);
  SmallGraph g(n);
  std::size_t idx = 0;
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a, ++idx) {
      const std::size_t byte = 1 + idx / 8;
      if (byte >= bytes.size()) throw std::invalid_argument("truncated encoding");
      if ((static_cast<unsigned char>(bytes[byte]) >> (7 - idx % 8)) & 1U) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace turan
