#include "turan/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "turan/errors.hpp"

namespace turan {

namespace {

void check_order(int n) {
  if (n < 0 || n > SmallGraph::kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " outside 0.." +
                        std::to_string(SmallGraph::kMaxVertices));
  }
}

}  // namespace

std::vector<int> bits_to_vector(Bits b) {
  std::vector<int> out;
  out.reserve(popcount(b));
  for_each_bit(b, [&](int v) { out.push_back(v); });
  return out;
}

Bits vector_to_bits(const std::vector<int>& vs) {
  Bits b = 0;
  for (int v : vs) b |= bit(v);
  return b;
}

SmallGraph::SmallGraph(int n) : n_(n) { check_order(n); }

SmallGraph::SmallGraph(int n, std::initializer_list<Edge> edges) : SmallGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

SmallGraph::SmallGraph(int n, const std::vector<Edge>& edges) : SmallGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int SmallGraph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

int SmallGraph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int SmallGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> SmallGraph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

void SmallGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw std::invalid_argument("bad edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") for order " + std::to_string(n_));
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void SmallGraph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("bad edge");
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int SmallGraph::add_vertex() {
  check_order(n_ + 1);
  return n_++;
}

SmallGraph SmallGraph::relabeled(const std::vector<int>& perm) const {
  SmallGraph out(n_);
  for (int u = 0; u < n_; ++u) {
    Bits row = 0;
    for_each_bit(adj_[u], [&](int v) { row |= bit(perm[v]); });
    out.adj_[perm[u]] = row;
  }
  return out;
}

bool operator==(const SmallGraph& a, const SmallGraph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

SmallGraph SmallGraph::empty(int n) { return SmallGraph(n); }

SmallGraph SmallGraph::complete(int n) {
  SmallGraph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = low_bits(n) & ~bit(v);
  return g;
}

SmallGraph SmallGraph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SmallGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SmallGraph SmallGraph::path(int n) {
  SmallGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SmallGraph SmallGraph::star(int leaves) { return join(complete(1), empty(leaves)); }

SmallGraph SmallGraph::complete_bipartite(int a, int b) { return join(empty(a), empty(b)); }

SmallGraph SmallGraph::wheel(int n) {
  if (n < 4) throw std::invalid_argument("wheel needs at least 4 vertices");
  return join(complete(1), cycle(n - 1));
}

SmallGraph SmallGraph::petersen() {
  SmallGraph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

SmallGraph SmallGraph::bowtie() { return SmallGraph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {3, 4}}); }

SmallGraph disjoint_union(const SmallGraph& g, const SmallGraph& h) {
  const int n = g.order() + h.order();
  check_order(n);
  SmallGraph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(g.order() + u, g.order() + v);
  return out;
}

SmallGraph join(const SmallGraph& g, const SmallGraph& h) {
  SmallGraph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

SmallGraph amalgam(const SmallGraph& g, int u, const SmallGraph& h, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= h.order()) {
    throw std::invalid_argument("amalgam vertex out of range");
  }
  const int n = g.order() + h.order() - 1;
  check_order(n);
  std::vector<int> map(h.order());
  int next = g.order();
  for (int w = 0; w < h.order(); ++w) map[w] = (w == v) ? u : next++;
  SmallGraph out(n);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (auto [a, b] : h.edges()) out.add_edge(map[a], map[b]);
  return out;
}

SmallGraph induced_subgraph(const SmallGraph& g, Bits vertex_set) {
  vertex_set &= g.vertices();
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for_each_bit(vertex_set, [&](int v) { index[v] = next++; });
  SmallGraph out(next);
  for_each_bit(vertex_set, [&](int u) {
    for_each_bit(g.neighbors(u) & vertex_set & ~low_bits(u + 1),
                 [&](int v) { out.add_edge(index[u], index[v]); });
  });
  return out;
}

SmallGraph remove_vertices(const SmallGraph& g, Bits vertex_set) {
  return induced_subgraph(g, g.vertices() & ~vertex_set);
}

SmallGraph complement(const SmallGraph& g) {
  SmallGraph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Bits reachable(const SmallGraph& g, int v, Bits allowed) {
  if (!(allowed & bit(v))) return 0;
  Bits seen = bit(v);
  Bits frontier = seen;
  while (frontier) {
    Bits next = 0;
    for_each_bit(frontier, [&](int w) { next |= g.neighbors(w); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<Bits> components(const SmallGraph& g) {
  std::vector<Bits> out;
  Bits left = g.vertices();
  while (left) {
    Bits comp = reachable(g, lowest(left), g.vertices());
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const SmallGraph& g) { return components(g).size() <= 1; }

std::string to_string(const SmallGraph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " e=" << g.size() << " {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : " ") << u << "-" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace turan
