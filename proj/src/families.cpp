#include "turan/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/errors.hpp"
#include "turan/oracle.hpp"
#include "turan/structure.hpp"

namespace turan {

namespace {

// Independent sets of f, found by branching on the lowest undecided vertex.
void independent_sets(const SmallGraph& f, Bits chosen, Bits undecided, std::vector<Bits>& out) {
  if (!undecided) {
    out.push_back(chosen);
    return;
  }
  const int v = lowest(undecided);
  independent_sets(f, chosen, undecided & ~bit(v), out);
  independent_sets(f, chosen | bit(v), undecided & ~bit(v) & ~f.neighbors(v), out);
}

bool is_maximal_independent(const SmallGraph& f, Bits set) {
  Bits dominated = set;
  for_each_bit(set, [&](int v) { dominated |= f.neighbors(v); });
  return dominated == f.vertices();
}

}  // namespace

std::vector<Bits> vertex_coverings(const SmallGraph& f) {
  if (f.order() > kMaxCoveringOrder) {
    throw CapacityError("vertex coverings limited to " + std::to_string(kMaxCoveringOrder) + " vertices");
  }
  std::vector<Bits> independent;
  independent_sets(f, 0, f.vertices(), independent);
  std::vector<Bits> out;
  out.reserve(independent.size());
  for (Bits s : independent) out.push_back(f.vertices() & ~s);
  std::sort(out.begin(), out.end());
  return out;
}

GraphFamily covering_family(const SmallGraph& f, bool minimal_only) {
  if (f.order() > kMaxCoveringOrder) {
    throw CapacityError("vertex coverings limited to " + std::to_string(kMaxCoveringOrder) + " vertices");
  }
  std::vector<Bits> independent;
  independent_sets(f, 0, f.vertices(), independent);
  GraphFamily fam;
  for (Bits s : independent) {
    if (minimal_only && !is_maximal_independent(f, s)) continue;
    fam.add(induced_subgraph(f, f.vertices() & ~s));
  }
  if (!minimal_only) return fam;

  const auto& members = fam.members();
  GraphFamily reduced;
  for (std::size_t i = 0; i < members.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < members.size() && !dominated; ++j) {
      dominated = j != i && contains_subgraph(members[i], members[j]);
    }
    if (!dominated) reduced.add(members[i]);
  }
  return reduced;
}

GraphFamily edge_deleted_family(const SmallGraph& f) {
  if (f.size() < 1 || f.order() < 3) {
    throw std::invalid_argument("edge-deleted family needs at least one edge and three vertices");
  }
  GraphFamily fam;
  for (auto [u, v] : f.edges()) fam.add(remove_vertices(f, bit(u) | bit(v)));
  return fam;
}

bool extremal_contains_hprime(int t, const GraphFamily& h_fam, const GraphFamily& hprime_fam, ExOracle& oracle) {
  SearchConstraint constraint;
  constraint.want_witnesses = true;
  const ExRecord rec = oracle.ex_exact(t, h_fam, constraint);
  if (!rec.value || rec.witnesses.empty()) return false;
  if (rec.truncated) throw BudgetExceeded("extremal set truncated; cannot decide the H' condition");
  for (const auto& g : rec.witnesses) {
    bool hit = false;
    for (const auto& m : hprime_fam.members()) {
      if (contains_subgraph(g, m)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace turan
