#pragma once

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// n - 1 = p(k - 2) + q with 0 <= q <= k - 3.
struct DivisionNKQ {
  std::int64_t p = 0;
  std::int64_t q = 0;
};

DivisionNKQ divide_nk(std::int64_t n, std::int64_t k);

/// floor((k - 1) / 2).
inline int half_floor(int k) { return (k - 1) / 2; }

// Closed-form edge counts, valid for any n.

std::int64_t binom2(std::int64_t n);
/// Edges of T(n, r): C(n,2) minus the pairs inside each near-equal part.
std::int64_t turan_edges(std::int64_t n, std::int64_t r);
/// ex(m, K_r) = e(T(m, r - 1)).
std::int64_t ex_complete(std::int64_t m, std::int64_t r);
/// f(n,k,r) = p ex(k-1, K_r) + ex(q+1, K_r).
std::int64_t f_nkr_value(std::int64_t n, std::int64_t k, std::int64_t r);
/// e(G1) = C(t,2) + t(n - t), t = floor((k-1)/2).
std::int64_t g1_edges(std::int64_t n, std::int64_t k);
/// e(G2) = e(T(t, r-2)) + t(n - t).
std::int64_t g2_edges(std::int64_t n, std::int64_t k, std::int64_t r);
/// floor((k-1)(n-1)/2), the cycle-threshold edge cap.
std::int64_t erdos_gallai_cap(std::int64_t n, std::int64_t k);

// Materialized graphs (order at most 64).

/// Complete r-partite graph on n vertices, parts as equal as possible,
/// larger parts first and labelled consecutively.
SmallGraph turan_graph(int n, int r);
SmallGraph f_nkr_graph(int n, int k, int r);
SmallGraph g1_graph(int n, int k);
SmallGraph g2_graph(int n, int k, int r);
/// T joined to an independent set so the result has n vertices.
SmallGraph join_extremal(const SmallGraph& t, int n);
/// Any cycle of T v I_m holds at most |T| independent-side vertices, each
/// between two distinct T vertices, so its length is at most 2|T|.
int join_circumference_bound(int t_order, int m);
/// All parts glued at one shared vertex: anchors[i] of part i (vertex 0 when
/// anchors is empty). The shared vertex is vertex 0 of the result.
SmallGraph chain_amalgam(const std::vector<SmallGraph>& parts, const std::vector<int>& anchors = {});
/// m triangles sharing one vertex.
SmallGraph friendship_graph(int m);

}  // namespace turan
