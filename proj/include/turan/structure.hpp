#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/family.hpp"
#include "turan/graph.hpp"

namespace turan {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// ---------------------------------------------------------------- blocks

struct BlockDecomposition {
  /// Vertex sets of the blocks: maximal 2-connected pieces, bridges, and
  /// isolated vertices. Sorted by bit value.
  std::vector<Bits> blocks;
  Bits cut_vertices = 0;
};

BlockDecomposition block_decomposition(const SmallGraph& g);

/// n >= 3, connected, no cut vertex.
bool is_two_connected(const SmallGraph& g);

// ---------------------------------------------------------------- cycles

/// Length of a longest cycle, 0 for forests. Exact; throws BudgetExceeded
/// when more than `node_budget` search nodes would be needed.
int circumference(const SmallGraph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Whether some cycle has length >= k (k >= 3). Stops at the first witness.
bool has_cycle_geq(const SmallGraph& g, int k, std::uint64_t node_budget = kDefaultNodeBudget);

/// All longest cycles, one vertex sequence per cycle up to rotation and
/// reflection: each starts at its smallest vertex and its second vertex is
/// smaller than its last.
///
/// With `reduce_twins` set, cycles that differ only by swapping twin vertices
/// (equal open or closed neighbourhoods) are reported once. Twin swaps are
/// automorphisms, so any automorphism-invariant quantity of C is unaffected.
std::vector<std::vector<int>> longest_cycles(const SmallGraph& g,
                                             std::uint64_t node_budget = kDefaultNodeBudget,
                                             bool reduce_twins = false);

/// Quantities on the exterior of a cycle C.
struct CycleExteriorStats {
  int c = 0;
  int e_out = 0;        ///< edges of G - C
  int e_cross = 0;      ///< edges between V(G) \ V(C) and V(C)
  int e_inside = 0;     ///< edges of G[V(C)]
  Bits a_set = 0;       ///< exterior vertices with exactly floor(c/2) neighbours on C
  int max_out_deg = 0;  ///< max over exterior u of d_C(u); 0 if C spans G
  /// Members of a_set that have a neighbour outside C.
  Bits a_with_outside_neighbor = 0;
};

/// Throws std::invalid_argument when `cycle` is not a cycle of g.
CycleExteriorStats cycle_exterior_stats(const SmallGraph& g, const std::vector<int>& cycle);

// ---------------------------------------------------------------- containment

/// Subgraph (not induced) embedding search for one fixed pattern, with plans
/// precomputed for unanchored, vertex-anchored and edge-anchored queries.
class PatternMatcher {
 public:
  /// `anchored` precomputes the vertex- and edge-anchored plans (needs a
  /// search for the pattern's vertex and edge orbits).
  explicit PatternMatcher(const SmallGraph& pattern, bool anchored = true);

  const SmallGraph& pattern() const { return pattern_; }

  bool occurs_in(const SmallGraph& host) const;
  /// Some copy maps a pattern vertex onto host vertex v.
  bool occurs_through_vertex(const SmallGraph& host, int v) const;
  /// Some copy maps a pattern edge onto the host edge {a, b}.
  bool occurs_through_edge(const SmallGraph& host, int a, int b) const;

 private:
  struct Plan {
    std::vector<int> order;        // pattern vertices in placement order
    std::vector<Bits> earlier;     // per position: adjacent earlier positions
    std::vector<bool> rest_isolated;
  };

  Plan make_plan(std::vector<int> prefix) const;
  bool run(const Plan& plan, const SmallGraph& host, int fixed, const int* fixed_images) const;

  SmallGraph pattern_;
  std::vector<int> pattern_degree_;
  Plan free_plan_;
  std::vector<std::pair<int, Plan>> vertex_plans_;          // one per vertex orbit
  std::vector<std::pair<Edge, Plan>> edge_plans_;           // one per directed edge orbit
};

bool contains_subgraph(const SmallGraph& g, const SmallGraph& pattern);

/// No member occurs as a subgraph and, with a cycle threshold k, the
/// circumference is at most k - 1. Patterns larger than g are absent.
bool is_family_free(const SmallGraph& g, const GraphFamily& fam,
                    std::uint64_t node_budget = kDefaultNodeBudget);

// ---------------------------------------------------------------- 2-colourings

/// Smallest colour class over proper 2-colourings; infinite when not bipartite.
struct PValue {
  bool infinite = false;
  int value = 0;

  bool at_least(int x) const { return infinite || value >= x; }
  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
  friend bool operator==(const PValue&, const PValue&) = default;
};

PValue p_value(const SmallGraph& f);

/// Bipartition sides of each component (side containing the smallest vertex
/// first), or nullopt when g has an odd cycle.
std::optional<std::vector<std::pair<Bits, Bits>>> component_bipartitions(const SmallGraph& g);

}  // namespace turan
