#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Relabeling-invariant identifier of an isomorphism class.
///
/// `bytes` is the order followed by the upper triangle of the canonically
/// relabeled adjacency matrix, bits taken in graph6 column order
/// x(0,1), x(0,2), x(1,2), x(0,3), ... and packed most significant bit
/// first. `perm[v]` is the canonical label of vertex v.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  std::vector<int> perm;

  std::string key() const { return std::string(bytes.begin(), bytes.end()); }
};

/// Canonical labeling by equitable partition refinement and a search over
/// individualized vertices, keeping the lexicographically smallest encoding.
/// Automorphisms met at leaves prune equivalent subtrees.
CanonicalForm canonical_form(const SmallGraph& g);

/// `g` relabeled by its canonical permutation.
SmallGraph canonical_graph(const SmallGraph& g);

bool is_isomorphic(const SmallGraph& g, const SmallGraph& h);

/// Upper-triangle encoding of g under its current labeling (no search).
std::vector<std::uint8_t> labeled_encoding(const SmallGraph& g);

}  // namespace turan
