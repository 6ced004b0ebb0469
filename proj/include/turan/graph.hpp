#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace turan {

/// A set of vertices of a SmallGraph, one bit per vertex.
using Bits = std::uint64_t;

inline constexpr Bits bit(int v) { return Bits{1} << v; }
inline constexpr Bits low_bits(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }
inline int popcount(Bits b) { return std::popcount(b); }
inline int lowest(Bits b) { return std::countr_zero(b); }

/// Iterate the members of a vertex set in increasing order.
template <typename F>
void for_each_bit(Bits b, F&& f) {
  while (b) {
    f(std::countr_zero(b));
    b &= b - 1;
  }
}

std::vector<int> bits_to_vector(Bits b);
Bits vector_to_bits(const std::vector<int>& vs);

using Edge = std::pair<int, int>;

/// Undirected simple graph on at most 64 vertices, adjacency stored as one
/// neighbour bit set per vertex.
///
/// Adjacency is kept symmetric and loop free by every mutator; bits at or
/// above order() are never set. Treat values as immutable once built: all
/// composition operators below return fresh graphs.
class SmallGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SmallGraph() = default;
  explicit SmallGraph(int n);
  SmallGraph(int n, std::initializer_list<Edge> edges);
  SmallGraph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const;
  Bits vertices() const { return low_bits(n_); }
  Bits neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int min_degree() const;
  int max_degree() const;
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Appends an isolated vertex and returns its index.
  int add_vertex();

  /// Graph with vertex v renamed to perm[v].
  SmallGraph relabeled(const std::vector<int>& perm) const;

  friend bool operator==(const SmallGraph& a, const SmallGraph& b);

  static SmallGraph empty(int n);
  static SmallGraph complete(int n);
  static SmallGraph cycle(int n);
  static SmallGraph path(int n);
  static SmallGraph star(int leaves);
  static SmallGraph complete_bipartite(int a, int b);
  /// Hub joined to a cycle on n-1 vertices; W(5) is K_1 v C_4.
  static SmallGraph wheel(int n);
  static SmallGraph petersen();
  static SmallGraph bowtie();

 private:
  int n_ = 0;
  std::array<Bits, kMaxVertices> adj_{};
};

SmallGraph join(const SmallGraph& g, const SmallGraph& h);
SmallGraph disjoint_union(const SmallGraph& g, const SmallGraph& h);
/// One-point union identifying vertex u of g with vertex v of h. The shared
/// vertex keeps index u; h's other vertices follow g's in their original order.
SmallGraph amalgam(const SmallGraph& g, int u, const SmallGraph& h, int v);
SmallGraph induced_subgraph(const SmallGraph& g, Bits vertex_set);
SmallGraph complement(const SmallGraph& g);
SmallGraph remove_vertices(const SmallGraph& g, Bits vertex_set);

/// Connected components as vertex sets, ordered by smallest member.
std::vector<Bits> components(const SmallGraph& g);
bool is_connected(const SmallGraph& g);
/// Vertices reachable from v inside `allowed` (v itself included when allowed).
Bits reachable(const SmallGraph& g, int v, Bits allowed);

std::string to_string(const SmallGraph& g);

}  // namespace turan
