#include "turan/constructions.hpp"

#include <stdexcept>
#include <string>

#include "turan/errors.hpp"

namespace turan {

DivisionNKQ divide_nk(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 3) throw std::invalid_argument("need n >= 1 and k >= 3");
  return DivisionNKQ{(n - 1) / (k - 2), (n - 1) % (k - 2)};
}

std::int64_t binom2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::int64_t turan_edges(std::int64_t n, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("Turan graph needs r >= 1");
  if (n <= 0) return 0;
  const std::int64_t small = n / r;
  const std::int64_t big_parts = n % r;
  return binom2(n) - big_parts * binom2(small + 1) - (r - big_parts) * binom2(small);
}

std::int64_t ex_complete(std::int64_t m, std::int64_t r) {
  if (r < 2) throw std::invalid_argument("K_r needs r >= 2");
  return turan_edges(m, r - 1);
}

std::int64_t f_nkr_value(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (k < 4 || r < 3) throw std::invalid_argument("f(n,k,r) needs k >= 4 and r >= 3");
  const DivisionNKQ d = divide_nk(n, k);
  return d.p * ex_complete(k - 1, r) + ex_complete(d.q + 1, r);
}

std::int64_t g1_edges(std::int64_t n, std::int64_t k) {
  const std::int64_t t = (k - 1) / 2;
  if (n < t) throw std::invalid_argument("G1 needs n >= floor((k-1)/2)");
  return binom2(t) + t * (n - t);
}

std::int64_t g2_edges(std::int64_t n, std::int64_t k, std::int64_t r) {
  const std::int64_t t = (k - 1) / 2;
  if (n < t) throw std::invalid_argument("G2 needs n >= floor((k-1)/2)");
  if (r < 3) throw std::invalid_argument("G2 needs r >= 3");
  return turan_edges(t, r - 2) + t * (n - t);
}

std::int64_t erdos_gallai_cap(std::int64_t n, std::int64_t k) { return (k - 1) * (n - 1) / 2; }

SmallGraph turan_graph(int n, int r) {
  if (r < 1) throw std::invalid_argument("Turan graph needs r >= 1");
  if (n > SmallGraph::kMaxVertices) throw CapacityError("Turan graph order " + std::to_string(n) + " above 64");
  std::vector<int> part(n);
  const int small = n / r;
  const int big_parts = n % r;
  int v = 0;
  for (int i = 0; i < r && v < n; ++i) {
    const int size = small + (i < big_parts ? 1 : 0);
    for (int j = 0; j < size; ++j) part[v++] = i;
  }
  SmallGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (part[a] != part[b]) g.add_edge(a, b);
    }
  }
  return g;
}

SmallGraph chain_amalgam(const std::vector<SmallGraph>& parts, const std::vector<int>& anchors) {
  if (parts.empty()) throw std::invalid_argument("chain amalgam needs at least one part");
  if (!anchors.empty() && anchors.size() != parts.size()) {
    throw std::invalid_argument("one anchor per part");
  }
  int total = 1;
  for (const auto& p : parts) {
    if (p.order() == 0) throw std::invalid_argument("chain amalgam parts must be nonempty");
    total += p.order() - 1;
  }
  if (total > SmallGraph::kMaxVertices) throw CapacityError("chain amalgam needs " + std::to_string(total) + " vertices");
  SmallGraph out(total);
  int next = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const SmallGraph& p = parts[i];
    const int anchor = anchors.empty() ? 0 : anchors[i];
    if (anchor < 0 || anchor >= p.order()) throw std::invalid_argument("anchor out of range");
    std::vector<int> map(p.order());
    for (int v = 0; v < p.order(); ++v) map[v] = v == anchor ? 0 : next++;
    for (auto [a, b] : p.edges()) out.add_edge(map[a], map[b]);
  }
  return out;
}

SmallGraph f_nkr_graph(int n, int k, int r) {
  if (k < 4 || r < 3) throw std::invalid_argument("F(n,k,r) needs k >= 4 and r >= 3");
  if (n > SmallGraph::kMaxVertices) throw CapacityError("F(n,k,r) order above 64");
  const DivisionNKQ d = divide_nk(n, k);
  std::vector<SmallGraph> parts(static_cast<std::size_t>(d.p), turan_graph(k - 1, r - 1));
  parts.push_back(turan_graph(static_cast<int>(d.q) + 1, r - 1));
  return chain_amalgam(parts);
}

SmallGraph g1_graph(int n, int k) {
  const int t = half_floor(k);
  if (n < t) throw std::invalid_argument("G1 needs n >= floor((k-1)/2)");
  return join(SmallGraph::complete(t), SmallGraph::empty(n - t));
}

SmallGraph g2_graph(int n, int k, int r) {
  const int t = half_floor(k);
  if (n < t) throw std::invalid_argument("G2 needs n >= floor((k-1)/2)");
  if (r < 3) throw std::invalid_argument("G2 needs r >= 3");
  return join(turan_graph(t, r - 2), SmallGraph::empty(n - t));
}

SmallGraph join_extremal(const SmallGraph& t, int n) {
  if (n < t.order()) throw std::invalid_argument("join_extremal needs n >= |T|");
  return join(t, SmallGraph::empty(n - t.order()));
}

int join_circumference_bound(int t_order, int m) {
  if (t_order < 1 || m < t_order) throw std::invalid_argument("need m >= t >= 1");
  return 2 * t_order;
}

SmallGraph friendship_graph(int m) {
  if (m < 1) throw std::invalid_argument("friendship graph needs m >= 1");
  if (2 * m + 1 > SmallGraph::kMaxVertices) throw CapacityError("friendship graph order above 64");
  return chain_amalgam(std::vector<SmallGraph>(static_cast<std::size_t>(m), SmallGraph::complete(3)));
}

}  // namespace turan
