#include "turan/structure.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

#include "turan/errors.hpp"

namespace turan {

// ---------------------------------------------------------------- blocks

namespace {

class BlockFinder {
 public:
  explicit BlockFinder(const SmallGraph& g) : g_(g) {}

  BlockDecomposition run() {
    for (int v = 0; v < g_.order(); ++v) {
      if (disc_[v]) continue;
      if (g_.degree(v) == 0) {
        out_.blocks.push_back(bit(v));
        disc_[v] = ++timer_;
        continue;
      }
      dfs(v, -1);
    }
    std::sort(out_.blocks.begin(), out_.blocks.end());
    return out_;
  }

 private:
  void dfs(int u, int parent) {
    disc_[u] = low_[u] = ++timer_;
    int children = 0;
    for_each_bit(g_.neighbors(u), [&](int v) {
      if (!disc_[v]) {
        ++children;
        stack_.emplace_back(u, v);
        dfs(v, u);
        low_[u] = std::min(low_[u], low_[v]);
        if (low_[v] >= disc_[u]) {
          if (parent != -1 || children > 1) out_.cut_vertices |= bit(u);
          Bits block = 0;
          while (true) {
            auto [a, b] = stack_.back();
            stack_.pop_back();
            block |= bit(a) | bit(b);
            if (a == u && b == v) break;
          }
          out_.blocks.push_back(block);
        }
      } else if (v != parent && disc_[v] < disc_[u]) {
        stack_.emplace_back(u, v);
        low_[u] = std::min(low_[u], disc_[v]);
      }
    });
  }

  const SmallGraph& g_;
  std::array<int, SmallGraph::kMaxVertices> disc_{};
  std::array<int, SmallGraph::kMaxVertices> low_{};
  int timer_ = 0;
  std::vector<Edge> stack_;
  BlockDecomposition out_;
};

}  // namespace

BlockDecomposition block_decomposition(const SmallGraph& g) { return BlockFinder(g).run(); }

bool is_two_connected(const SmallGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_decomposition(g).cut_vertices == 0;
}

// ---------------------------------------------------------------- cycles

namespace {

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : left_(budget) {}
  void tick() {
    if (left_ == 0) throw BudgetExceeded("cycle search exceeded its node budget");
    --left_;
  }

 private:
  std::uint64_t left_;
};

// Depth-first extension of paths from a start vertex s through vertices
// larger than s, so every cycle is found from its smallest vertex.
class CycleFinder {
 public:
  enum class Mode { kLongest, kExists, kCollect };

  CycleFinder(const SmallGraph& g, NodeCounter& counter, bool reduce_twins)
      : g_(g), counter_(counter), reduce_twins_(reduce_twins) {
    for (int v = 0; v < g.order(); ++v) {
      twin_[v] = bit(v);
      if (!reduce_twins) continue;
      for (int w = 0; w < g.order(); ++w) {
        if (w != v && (g.neighbors(v) & ~bit(w)) == (g.neighbors(w) & ~bit(v))) twin_[v] |= bit(w);
      }
    }
  }

  int longest(int known) {
    mode_ = Mode::kLongest;
    best_ = known;
    target_ = std::max(3, known + 1);
    sweep();
    return best_;
  }

  bool exists(int k) {
    mode_ = Mode::kExists;
    target_ = k;
    sweep();
    return found_;
  }

  std::vector<std::vector<int>> collect(int c) {
    mode_ = Mode::kCollect;
    target_ = c;
    sweep();
    return std::move(cycles_);
  }

 private:
  void sweep() {
    const int n = g_.order();
    for (int s = 0; s < n && !found_; ++s) {
      const Bits allowed = g_.vertices() & ~low_bits(s + 1);
      if (popcount(allowed) + 1 < target_) break;
      if (reduce_twins_ && (twin_[s] & low_bits(s))) continue;
      start_ = s;
      allowed_ = allowed;
      path_[0] = s;
      extend(s, bit(s), 1);
    }
  }

  void extend(int end, Bits used, int len) {
    counter_.tick();
    if (len >= 3 && len >= target_ && g_.adjacent(end, start_)) {
      close(len);
      if (found_) return;
    }
    const Bits avail = allowed_ & ~used;
    Bits cand = g_.neighbors(end) & avail;
    if (!cand) return;
    if (len + popcount(reachable(g_, end, avail | bit(end))) - 1 < target_) return;
    while (cand) {
      const int w = lowest(cand);
      cand &= ~twin_[w];
      path_[len] = w;
      extend(w, used | bit(w), len + 1);
      if (found_) return;
      if (mode_ == Mode::kLongest && len + popcount(reachable(g_, end, avail | bit(end))) - 1 < target_) return;
    }
  }

  void close(int len) {
    switch (mode_) {
      case Mode::kLongest:
        best_ = len;
        target_ = len + 1;
        break;
      case Mode::kExists:
        found_ = true;
        break;
      case Mode::kCollect:
        if (len != target_) break;
        if (!reduce_twins_ && path_[1] > path_[len - 1]) break;
        {
          std::vector<int> cyc(path_.begin(), path_.begin() + len);
          if (cyc[1] > cyc[len - 1]) std::reverse(cyc.begin() + 1, cyc.end());
          cycles_.push_back(std::move(cyc));
        }
        break;
    }
  }

  const SmallGraph& g_;
  NodeCounter& counter_;
  bool reduce_twins_;
  std::array<Bits, SmallGraph::kMaxVertices> twin_{};
  std::array<int, SmallGraph::kMaxVertices> path_{};
  Mode mode_ = Mode::kLongest;
  int start_ = 0;
  Bits allowed_ = 0;
  int target_ = 3;
  int best_ = 0;
  bool found_ = false;
  std::vector<std::vector<int>> cycles_;
};

}  // namespace

int circumference(const SmallGraph& g, std::uint64_t node_budget) {
  if (g.order() < 3 || g.size() < 3) return 0;
  NodeCounter counter(node_budget);
  const BlockDecomposition bd = block_decomposition(g);
  int best = 0;
  // bigger blocks first: they usually hold the answer and raise the bar early
  std::vector<Bits> blocks = bd.blocks;
  std::stable_sort(blocks.begin(), blocks.end(), [](Bits a, Bits b) { return popcount(a) > popcount(b); });
  for (Bits block : blocks) {
    if (popcount(block) < 3 || popcount(block) <= best) continue;
    SmallGraph sub = induced_subgraph(g, block);
    CycleFinder finder(sub, counter, true);
    best = finder.longest(best);
  }
  return best;
}

bool has_cycle_geq(const SmallGraph& g, int k, std::uint64_t node_budget) {
  if (k < 3) throw std::invalid_argument("cycle threshold must be at least 3");
  if (g.order() < k || g.size() < k) return false;
  NodeCounter counter(node_budget);
  for (Bits block : block_decomposition(g).blocks) {
    if (popcount(block) < k) continue;
    SmallGraph sub = induced_subgraph(g, block);
    CycleFinder finder(sub, counter, true);
    if (finder.exists(k)) return true;
  }
  return false;
}

std::vector<std::vector<int>> longest_cycles(const SmallGraph& g, std::uint64_t node_budget, bool reduce_twins) {
  const int c = circumference(g, node_budget);
  if (c == 0) return {};
  NodeCounter counter(node_budget);
  CycleFinder finder(g, counter, reduce_twins);
  std::vector<std::vector<int>> cycles = finder.collect(c);
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  return cycles;
}

CycleExteriorStats cycle_exterior_stats(const SmallGraph& g, const std::vector<int>& cycle) {
  const int c = static_cast<int>(cycle.size());
  if (c < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Bits on = 0;
  for (int i = 0; i < c; ++i) {
    const int v = cycle[i];
    if (v < 0 || v >= g.order() || (on & bit(v))) throw std::invalid_argument("cycle vertices must be distinct and in range");
    on |= bit(v);
    if (!g.adjacent(v, cycle[(i + 1) % c])) throw std::invalid_argument("consecutive cycle vertices are not adjacent");
  }
  CycleExteriorStats st;
  st.c = c;
  const Bits off = g.vertices() & ~on;
  for_each_bit(on, [&](int v) { st.e_inside += popcount(g.neighbors(v) & on); });
  st.e_inside /= 2;
  int twice_out = 0;
  for_each_bit(off, [&](int u) {
    const int d_c = popcount(g.neighbors(u) & on);
    twice_out += popcount(g.neighbors(u) & off);
    st.e_cross += d_c;
    st.max_out_deg = std::max(st.max_out_deg, d_c);
    if (d_c == c / 2) {
      st.a_set |= bit(u);
      if (g.neighbors(u) & off) st.a_with_outside_neighbor |= bit(u);
    }
  });
  st.e_out = twice_out / 2;
  return st;
}

// ---------------------------------------------------------------- containment

PatternMatcher::PatternMatcher(const SmallGraph& pattern, bool anchored) : pattern_(pattern) {
  const int n = pattern.order();
  pattern_degree_.resize(n);
  for (int v = 0; v < n; ++v) pattern_degree_[v] = pattern.degree(v);
  free_plan_ = make_plan({});
  if (!anchored) return;

  // orbit representatives: an embedding of the pattern into itself is an automorphism
  std::vector<int> vertex_rep(n, -1);
  for (int v = 0; v < n; ++v) {
    if (vertex_rep[v] != -1) continue;
    vertex_rep[v] = v;
    Plan plan = make_plan({v});
    for (int w = v + 1; w < n; ++w) {
      if (vertex_rep[w] == -1 && run(plan, pattern_, 1, &w)) vertex_rep[w] = v;
    }
    vertex_plans_.emplace_back(v, std::move(plan));
  }
  std::vector<Edge> directed;
  for (auto [a, b] : pattern.edges()) {
    directed.emplace_back(a, b);
    directed.emplace_back(b, a);
  }
  std::vector<bool> covered(directed.size(), false);
  for (std::size_t i = 0; i < directed.size(); ++i) {
    if (covered[i]) continue;
    covered[i] = true;
    auto [x, y] = directed[i];
    Plan plan = make_plan({x, y});
    for (std::size_t j = i + 1; j < directed.size(); ++j) {
      if (covered[j]) continue;
      int imgs[2] = {directed[j].first, directed[j].second};
      if (run(plan, pattern_, 2, imgs)) covered[j] = true;
    }
    edge_plans_.emplace_back(directed[i], std::move(plan));
  }
}

PatternMatcher::Plan PatternMatcher::make_plan(std::vector<int> prefix) const {
  const int n = pattern_.order();
  Plan plan;
  Bits placed = 0;
  for (int v : prefix) placed |= bit(v);
  plan.order = std::move(prefix);
  while (static_cast<int>(plan.order.size()) < n) {
    int pick = -1;
    int pick_links = -1;
    for (int v = 0; v < n; ++v) {
      if (placed & bit(v)) continue;
      int links = popcount(pattern_.neighbors(v) & placed);
      if (links > pick_links || (links == pick_links && pattern_degree_[v] > pattern_degree_[pick])) {
        pick = v;
        pick_links = links;
      }
    }
    plan.order.push_back(pick);
    placed |= bit(pick);
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[plan.order[i]] = i;
  plan.earlier.assign(n, 0);
  plan.rest_isolated.assign(n + 1, true);
  for (int i = 0; i < n; ++i) {
    for_each_bit(pattern_.neighbors(plan.order[i]), [&](int w) {
      if (pos[w] < i) plan.earlier[i] |= bit(pos[w]);
    });
  }
  for (int i = n - 1; i >= 0; --i) plan.rest_isolated[i] = plan.rest_isolated[i + 1] && pattern_degree_[plan.order[i]] == 0;
  return plan;
}

bool PatternMatcher::run(const Plan& plan, const SmallGraph& host, int fixed, const int* fixed_images) const {
  const int n = static_cast<int>(plan.order.size());
  if (n > host.order()) return false;
  std::array<Bits, SmallGraph::kMaxVertices> deg_ok{};
  {
    std::array<int, SmallGraph::kMaxVertices> host_degree{};
    for (int v = 0; v < host.order(); ++v) host_degree[v] = host.degree(v);
    for (int i = 0; i < n; ++i) {
      const int need = pattern_degree_[plan.order[i]];
      Bits m = 0;
      for (int v = 0; v < host.order(); ++v) {
        if (host_degree[v] >= need) m |= bit(v);
      }
      deg_ok[i] = m;
    }
  }
  std::array<int, SmallGraph::kMaxVertices> img{};
  Bits used = 0;
  for (int i = 0; i < fixed; ++i) {
    const int v = fixed_images[i];
    if ((used & bit(v)) || !(deg_ok[i] & bit(v))) return false;
    bool ok = true;
    for_each_bit(plan.earlier[i], [&](int j) { ok = ok && host.adjacent(img[j], v); });
    if (!ok) return false;
    img[i] = v;
    used |= bit(v);
  }

  auto place = [&](auto&& self, int i) -> bool {
    if (plan.rest_isolated[i]) return popcount(host.vertices() & ~used) >= n - i;
    Bits cand = deg_ok[i] & ~used;
    for_each_bit(plan.earlier[i], [&](int j) { cand &= host.neighbors(img[j]); });
    while (cand) {
      const int v = lowest(cand);
      cand &= cand - 1;
      img[i] = v;
      used |= bit(v);
      if (self(self, i + 1)) return true;
      used &= ~bit(v);
    }
    return false;
  };
  return place(place, fixed);
}

bool PatternMatcher::occurs_in(const SmallGraph& host) const {
  if (pattern_.order() > host.order() || pattern_.size() > host.size()) return false;
  return run(free_plan_, host, 0, nullptr);
}

bool PatternMatcher::occurs_through_vertex(const SmallGraph& host, int v) const {
  if (pattern_.order() > host.order() || pattern_.size() > host.size()) return false;
  for (const auto& [x, plan] : vertex_plans_) {
    if (run(plan, host, 1, &v)) return true;
  }
  return false;
}

bool PatternMatcher::occurs_through_edge(const SmallGraph& host, int a, int b) const {
  if (!host.adjacent(a, b)) return false;
  if (pattern_.order() > host.order() || pattern_.size() > host.size()) return false;
  const int imgs[2] = {a, b};
  for (const auto& [e, plan] : edge_plans_) {
    if (run(plan, host, 2, imgs)) return true;
  }
  return false;
}

bool contains_subgraph(const SmallGraph& g, const SmallGraph& pattern) {
  return PatternMatcher(pattern, false).occurs_in(g);
}

bool is_family_free(const SmallGraph& g, const GraphFamily& fam, std::uint64_t node_budget) {
  for (const auto& m : fam.members()) {
    if (contains_subgraph(g, m)) return false;
  }
  if (auto k = fam.cycle_threshold()) return !has_cycle_geq(g, *k, node_budget);
  return true;
}

// ---------------------------------------------------------------- 2-colourings

std::optional<std::vector<std::pair<Bits, Bits>>> component_bipartitions(const SmallGraph& g) {
  std::vector<std::pair<Bits, Bits>> out;
  for (Bits comp : components(g)) {
    const int root = lowest(comp);
    Bits side[2] = {bit(root), 0};
    Bits frontier = bit(root);
    int parity = 0;
    while (frontier) {
      Bits next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
      if (next & side[parity]) return std::nullopt;
      next &= ~side[1 - parity];
      parity = 1 - parity;
      side[parity] |= next;
      frontier = next;
    }
    out.emplace_back(side[0], side[1]);
  }
  return out;
}

PValue p_value(const SmallGraph& f) {
  auto parts = component_bipartitions(f);
  if (!parts) return PValue{true, 0};
  int total = 0;
  for (auto [a, b] : *parts) total += std::min(popcount(a), popcount(b));
  return PValue{false, total};
}

}  // namespace turan
