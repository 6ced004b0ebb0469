#include <doctest.h>

#include "naive.hpp"
#include "turan/canonical.hpp"
#include "turan/errors.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/oracle.hpp"

using namespace turan;

namespace {

bool same_members(const GraphFamily& fam, const std::vector<SmallGraph>& expected) {
  return fam == GraphFamily(expected, fam.cycle_threshold());
}

}  // namespace

TEST_CASE("family deduplicates up to isomorphism") {
  GraphFamily a({SmallGraph::path(3), SmallGraph::complete(3)});
  GraphFamily b({SmallGraph::complete(3), SmallGraph(3, {{1, 0}, {0, 2}}), SmallGraph::path(3)});
  CHECK(a.size() == 2);
  CHECK(a == b);
  CHECK(a.fingerprint() == b.fingerprint());
  CHECK_FALSE(a.add(SmallGraph(3, {{2, 1}, {0, 2}})));
  CHECK_THROWS(GraphFamily({}, 2));
  GraphFamily c({}, 5);
  CHECK_FALSE(c.empty());
  CHECK(c.fingerprint() == "[];C>=5");
}

TEST_CASE("vertex coverings") {
  CHECK(vertex_coverings(SmallGraph::complete(4)).size() == 5);
  CHECK(vertex_coverings(SmallGraph::complete_bipartite(2, 3)).size() == 11);
  CHECK(vertex_coverings(SmallGraph::empty(3)).size() == 8);
  for (Bits s : vertex_coverings(SmallGraph::petersen())) {
    Bits rest = SmallGraph::petersen().vertices() & ~s;
    CHECK(induced_subgraph(SmallGraph::petersen(), rest).size() == 0);
  }
  CHECK_THROWS_AS(vertex_coverings(SmallGraph::empty(25)), CapacityError);
}

TEST_CASE("vertex coverings match a subset scan") {
  for (const SmallGraph& f : {SmallGraph::petersen(), SmallGraph::wheel(6), SmallGraph::path(5)}) {
    std::vector<Bits> scan;
    for (Bits s = 0; s <= f.vertices(); ++s) {
      if (induced_subgraph(f, f.vertices() & ~s).size() == 0) scan.push_back(s);
    }
    CHECK(vertex_coverings(f) == scan);
  }
}

TEST_CASE("covering family") {
  CHECK(same_members(covering_family(SmallGraph::complete(4)), {SmallGraph::complete(3)}));
  CHECK(same_members(covering_family(SmallGraph::complete_bipartite(2, 3)), {SmallGraph::empty(2)}));
  CHECK(same_members(covering_family(SmallGraph::complete(5)), {SmallGraph::complete(4)}));
  CHECK(same_members(covering_family(SmallGraph::complete_bipartite(3, 3)), {SmallGraph::empty(3)}));
  GraphFamily full = covering_family(SmallGraph::complete(4), false);
  CHECK(same_members(full, {SmallGraph::complete(3), SmallGraph::complete(4)}));
}

TEST_CASE("covering family member orders") {
  ExOracle oracle;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& f : oracle.free_graphs(n, GraphFamily{})) {
      GraphFamily h = covering_family(f);
      PValue p = p_value(f);
      int smallest = 100;
      for (const auto& m : h.members()) smallest = std::min(smallest, m.order());
      if (p.infinite) {
        for (const auto& m : h.members()) CHECK(m.size() >= 1);
      } else {
        CHECK(smallest <= p.value);
      }
    }
  }
}

TEST_CASE("edge deleted family") {
  CHECK(same_members(edge_deleted_family(SmallGraph::complete(4)), {SmallGraph::complete(2)}));
  CHECK(same_members(edge_deleted_family(SmallGraph::complete_bipartite(3, 3)),
                     {SmallGraph::complete_bipartite(2, 2)}));
  CHECK(same_members(edge_deleted_family(SmallGraph::path(4)), {SmallGraph::complete(2), SmallGraph::empty(2)}));
  CHECK_THROWS(edge_deleted_family(SmallGraph::empty(4)));
  CHECK_THROWS(edge_deleted_family(SmallGraph::complete(2)));
}

TEST_CASE("extremal sets and the edge-deleted condition") {
  ExOracle oracle;
  GraphFamily h33 = covering_family(SmallGraph::complete_bipartite(3, 3));
  CHECK_FALSE(extremal_contains_hprime(2, h33, edge_deleted_family(SmallGraph::complete_bipartite(3, 3)), oracle));
  GraphFamily h4 = covering_family(SmallGraph::complete(4));
  CHECK(extremal_contains_hprime(3, h4, edge_deleted_family(SmallGraph::complete(4)), oracle));
  CHECK(extremal_contains_hprime(4, h4, GraphFamily({SmallGraph::complete(1)}), oracle));
}
