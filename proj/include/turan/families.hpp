#pragma once

#include <vector>

#include "turan/family.hpp"
#include "turan/graph.hpp"

namespace turan {

class ExOracle;

inline constexpr int kMaxCoveringOrder = 24;

/// Every S with V(f) \ S independent, as vertex sets in increasing bit order.
/// Found by enumerating independent sets and complementing. Throws
/// CapacityError above 24 vertices.
std::vector<Bits> vertex_coverings(const SmallGraph& f);

/// {f[S] : S a vertex covering}, deduplicated up to isomorphism.
///
/// With `minimal_only`, only inclusion-minimal coverings are used and any
/// member containing another member as a subgraph is dropped. Both versions
/// forbid exactly the same host graphs, since f[S] is a subgraph of f[S']
/// whenever S is a subset of S'.
GraphFamily covering_family(const SmallGraph& f, bool minimal_only = true);

/// {f - {u, v} : uv an edge of f}. Needs at least one edge and 3 vertices.
GraphFamily edge_deleted_family(const SmallGraph& f);

/// Whether every graph in EX(t, h_fam) contains some member of hprime_fam.
/// False when EX(t, h_fam) is empty.
bool extremal_contains_hprime(int t, const GraphFamily& h_fam, const GraphFamily& hprime_fam, ExOracle& oracle);

}  // namespace turan
