#include <doctest.h>

#include <random>

#include "naive.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/oracle.hpp"
#include "turan/structure.hpp"

using namespace turan;

TEST_CASE("block decomposition") {
  BlockDecomposition bow = block_decomposition(SmallGraph::bowtie());
  CHECK(bow.blocks.size() == 2);
  CHECK(popcount(bow.cut_vertices) == 1);
  BlockDecomposition p4 = block_decomposition(SmallGraph::path(4));
  CHECK(p4.blocks.size() == 3);
  CHECK(popcount(p4.cut_vertices) == 2);
  BlockDecomposition k4 = block_decomposition(SmallGraph::complete(4));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.cut_vertices == 0);
  CHECK(block_decomposition(SmallGraph::empty(3)).blocks.size() == 3);
}

TEST_CASE("block invariants on all graphs with 6 vertices") {
  ExOracle oracle;
  for (const auto& g : oracle.free_graphs(6, GraphFamily{})) {
    BlockDecomposition bd = block_decomposition(g);
    int edge_sum = 0;
    int order_sum = 0;
    for (Bits b : bd.blocks) {
      edge_sum += induced_subgraph(g, b).size();
      order_sum += popcount(b) - 1;
    }
    CHECK(edge_sum == g.size());
    CHECK(order_sum == g.order() - static_cast<int>(components(g).size()));
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
        Bits shared = bd.blocks[i] & bd.blocks[j];
        CHECK(popcount(shared) <= 1);
        CHECK((shared & ~bd.cut_vertices) == 0);
      }
    }
  }
}

TEST_CASE("two connectivity") {
  CHECK(is_two_connected(SmallGraph::cycle(4)));
  CHECK_FALSE(is_two_connected(SmallGraph::path(3)));
  CHECK(is_two_connected(SmallGraph::complete(3)));
  CHECK_FALSE(is_two_connected(SmallGraph::complete(2)));
  CHECK_FALSE(is_two_connected(SmallGraph::bowtie()));
}

TEST_CASE("circumference") {
  CHECK(circumference(SmallGraph::cycle(5)) == 5);
  CHECK(circumference(SmallGraph::star(5)) == 0);
  CHECK(circumference(SmallGraph::path(6)) == 0);
  CHECK(circumference(SmallGraph::petersen()) == 9);
  CHECK(circumference(SmallGraph::bowtie()) == 3);
  CHECK(circumference(g1_graph(10, 7)) == 6);
  CHECK_THROWS_AS(circumference(SmallGraph::complete(12), 10), BudgetExceeded);
}

TEST_CASE("circumference agrees with brute force on 7 vertex graphs") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint64_t> pick(0, naive::labeled_count(7) - 1);
  for (int i = 0; i < 400; ++i) {
    SmallGraph g = naive::labeled_graph(7, pick(rng));
    const int c = naive::brute_circumference(g);
    CHECK(circumference(g) == c);
    for (int k = 3; k <= 8; ++k) CHECK(has_cycle_geq(g, k) == (c >= k));
  }
}

TEST_CASE("cycle threshold queries") {
  CHECK(has_cycle_geq(SmallGraph::cycle(5), 5));
  CHECK_FALSE(has_cycle_geq(SmallGraph::cycle(5), 6));
  CHECK_FALSE(has_cycle_geq(SmallGraph::bowtie(), 4));
}

TEST_CASE("longest cycles") {
  CHECK(longest_cycles(SmallGraph::cycle(4)).size() == 1);
  CHECK(longest_cycles(SmallGraph::bowtie()).size() == 2);
  CHECK(longest_cycles(SmallGraph::complete(4)).size() == 3);
  CHECK(longest_cycles(SmallGraph::complete(5)).size() == 12);
  for (const auto& c : longest_cycles(SmallGraph::petersen())) CHECK(c.size() == 9);
  // twins 1 and 3 of C4 are swapped by an automorphism
  SmallGraph k24 = SmallGraph::complete_bipartite(2, 4);
  CHECK(longest_cycles(k24).size() == 6);
  CHECK(longest_cycles(k24, kDefaultNodeBudget, true).size() == 1);
}

TEST_CASE("cycle exterior statistics") {
  SmallGraph bow = SmallGraph::bowtie();
  CycleExteriorStats s = cycle_exterior_stats(bow, {0, 1, 2});
  CHECK(s.c == 3);
  CHECK(s.e_out == 1);
  CHECK(s.e_cross == 2);
  CHECK(s.e_inside == 3);
  CHECK(popcount(s.a_set) == 2);
  CHECK(s.max_out_deg == 1);

  SmallGraph c4p = SmallGraph::cycle(4);
  c4p.add_vertex();
  c4p.add_edge(0, 4);
  s = cycle_exterior_stats(c4p, {0, 1, 2, 3});
  CHECK(s.e_out == 0);
  CHECK(s.e_cross == 1);
  CHECK(s.a_set == 0);

  s = cycle_exterior_stats(SmallGraph::complete(5), {0, 1, 2, 3, 4});
  CHECK(s.e_out == 0);
  CHECK(s.e_cross == 0);
  CHECK(s.max_out_deg == 0);

  CHECK_THROWS_AS(cycle_exterior_stats(c4p, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_exterior_stats(c4p, {0, 1}), std::invalid_argument);
}

TEST_CASE("subgraph containment") {
  CHECK(contains_subgraph(SmallGraph::cycle(5), SmallGraph::path(4)));
  CHECK_FALSE(contains_subgraph(SmallGraph::cycle(5), SmallGraph::complete(3)));
  CHECK(contains_subgraph(SmallGraph::petersen(), SmallGraph::cycle(5)));
  CHECK_FALSE(contains_subgraph(SmallGraph::petersen(), SmallGraph::cycle(4)));
  CHECK(contains_subgraph(SmallGraph::complete(4), SmallGraph::empty(4)));
  CHECK_FALSE(contains_subgraph(SmallGraph::complete(3), SmallGraph::empty(4)));
  CHECK(contains_subgraph(SmallGraph::path(4), disjoint_union(SmallGraph::complete(2), SmallGraph::complete(2))));
}

TEST_CASE("anchored containment matches recomputation") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::uint64_t> pick(0, naive::labeled_count(7) - 1);
  const std::vector<SmallGraph> patterns = {SmallGraph::complete(3), SmallGraph::cycle(4), SmallGraph::path(4),
                                            SmallGraph::complete_bipartite(2, 3), SmallGraph::bowtie(),
                                            disjoint_union(SmallGraph::complete(3), SmallGraph::empty(1))};
  for (const auto& pat : patterns) {
    PatternMatcher pm(pat);
    for (int i = 0; i < 150; ++i) {
      SmallGraph g = naive::labeled_graph(7, pick(rng));
      const bool whole = pm.occurs_in(g);
      CHECK(whole == contains_subgraph(g, pat));
      for (auto [a, b] : g.edges()) {
        SmallGraph h = g;
        h.remove_edge(a, b);
        // every copy uses ab when deleting it leaves none
        if (whole && !contains_subgraph(h, pat)) CHECK(pm.occurs_through_edge(g, a, b));
        if (!whole) CHECK_FALSE(pm.occurs_through_edge(g, a, b));
      }
    }
  }
}

TEST_CASE("family freeness") {
  CHECK(is_family_free(SmallGraph::bowtie(), GraphFamily({SmallGraph::complete(4)}, 4)));
  CHECK_FALSE(is_family_free(SmallGraph::complete(4), GraphFamily({SmallGraph::complete(4)})));
  CHECK_FALSE(is_family_free(turan_graph(5, 2), GraphFamily({}, 4)));
  CHECK(is_family_free(SmallGraph::complete(3), GraphFamily({SmallGraph::complete(4)})));
}

TEST_CASE("p value") {
  CHECK(p_value(SmallGraph::complete_bipartite(2, 3)) == PValue{false, 2});
  CHECK(p_value(SmallGraph::cycle(5)).infinite);
  CHECK(p_value(disjoint_union(SmallGraph::path(3), SmallGraph::complete(2))) == PValue{false, 2});
  CHECK(p_value(SmallGraph::empty(4)) == PValue{false, 0});
  CHECK(p_value(SmallGraph::complete_bipartite(3, 3)).value == 3);
  CHECK(p_value(SmallGraph::cycle(5)).at_least(100));
  CHECK(p_value(SmallGraph::cycle(5)).to_string() == "inf");
}

TEST_CASE("p value matches enumeration of colourings") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<std::uint64_t> pick(0, naive::labeled_count(6) - 1);
  for (int i = 0; i < 300; ++i) {
    SmallGraph g = naive::labeled_graph(6, pick(rng));
    int best = 100;
    for (Bits red = 0; red < 64; ++red) {
      bool proper = true;
      for (auto [a, b] : g.edges()) proper = proper && (((red >> a) & 1) != ((red >> b) & 1));
      if (proper) best = std::min({best, popcount(red), 6 - popcount(red)});
    }
    PValue p = p_value(g);
    if (best == 100) CHECK(p.infinite);
    else CHECK(p == PValue{false, best});
  }
}
