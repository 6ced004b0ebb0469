#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "naive.hpp"
#include "turan/cache.hpp"
#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"
#include "turan/oracle.hpp"
#include "turan/structure.hpp"

using namespace turan;

namespace {

bool meets(const SmallGraph& g, Connectivity c) {
  if (c == Connectivity::kConnected) return is_connected(g);
  if (c == Connectivity::kTwoConnected) return is_two_connected(g);
  return true;
}

std::optional<int> naive_ex(int n, const GraphFamily& fam, Connectivity c = Connectivity::kAny) {
  return naive::max_edges(n, [&](const SmallGraph& g) { return meets(g, c) && is_family_free(g, fam); });
}

std::vector<GraphFamily> battery() {
  return {
      GraphFamily({SmallGraph::complete(3)}),
      GraphFamily({}, 4),
      GraphFamily({SmallGraph::complete(4)}, 5),
      GraphFamily({SmallGraph::cycle(4)}),
      GraphFamily({SmallGraph::path(4)}),
      GraphFamily({SmallGraph::star(3), SmallGraph::cycle(4)}),
      GraphFamily({SmallGraph::empty(3)}),
      GraphFamily({disjoint_union(SmallGraph::complete(2), SmallGraph::empty(2))}),
      GraphFamily({disjoint_union(SmallGraph::complete(3), SmallGraph::empty(1))}, 5),
      GraphFamily({SmallGraph::bowtie()}, 6),
  };
}

}  // namespace

TEST_CASE("isomorphism class counts") {
  ExOracle oracle;
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) CHECK(oracle.free_graphs(n, GraphFamily{}).size() == expected[n - 1]);
}

TEST_CASE("free graphs match brute force") {
  ExOracle oracle;
  for (const auto& fam : battery()) {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> brute;
      for (std::uint64_t mask = 0; mask < naive::labeled_count(n); ++mask) {
        SmallGraph g = naive::labeled_graph(n, mask);
        if (is_family_free(g, fam)) brute.insert(canonical_form(g).key());
      }
      std::set<std::string> gen;
      for (const auto& g : oracle.free_graphs(n, fam)) gen.insert(canonical_form(g).key());
      CHECK_MESSAGE(gen == brute, describe(fam), " n=", n);
    }
  }
}

TEST_CASE("ex matches brute force") {
  ExOracle oracle;
  for (const auto& fam : battery()) {
    for (int n = 1; n <= 6; ++n) {
      for (Connectivity c : {Connectivity::kAny, Connectivity::kConnected, Connectivity::kTwoConnected}) {
        SearchConstraint sc;
        sc.connectivity = c;
        ExRecord rec = oracle.ex_exact(n, fam, sc);
        CHECK_MESSAGE(rec.value == naive_ex(n, fam, c), describe(fam), " n=", n, " ", to_string(c));
        for (const auto& w : rec.witnesses) {
          CHECK(w.size() == *rec.value);
          CHECK(is_family_free(w, fam));
          CHECK(meets(w, c));
        }
      }
    }
  }
}

TEST_CASE("witness sets are complete") {
  ExOracle oracle;
  for (const auto& fam : battery()) {
    for (int n = 2; n <= 6; ++n) {
      ExRecord rec = oracle.ex_exact(n, fam);
      if (!rec.value) continue;
      std::set<std::string> brute;
      for (std::uint64_t mask = 0; mask < naive::labeled_count(n); ++mask) {
        if (std::popcount(mask) != *rec.value) continue;
        SmallGraph g = naive::labeled_graph(n, mask);
        if (is_family_free(g, fam)) brute.insert(canonical_form(g).key());
      }
      std::set<std::string> got;
      for (const auto& w : rec.witnesses) got.insert(canonical_form(w).key());
      CHECK(got == brute);
    }
  }
}

TEST_CASE("named values") {
  ExOracle oracle;
  ExRecord k3 = oracle.ex_exact(5, GraphFamily({SmallGraph::complete(3)}));
  CHECK(k3.value == 6);
  REQUIRE(k3.witnesses.size() == 1);
  CHECK(is_isomorphic(k3.witnesses[0], SmallGraph::complete_bipartite(2, 3)));

  ExRecord c4 = oracle.ex_exact(5, GraphFamily({}, 4));
  CHECK(c4.value == 6);
  bool bowtie = false;
  for (const auto& w : c4.witnesses) bowtie = bowtie || is_isomorphic(w, SmallGraph::bowtie());
  CHECK(bowtie);

  CHECK(oracle.ex_exact(9, GraphFamily({SmallGraph::complete(5)}, 6)).value == 18);

  auto p3 = oracle.extremal_graphs(3, GraphFamily({SmallGraph::complete(3)}));
  REQUIRE(p3.size() == 1);
  CHECK(is_isomorphic(p3[0], SmallGraph::path(3)));
  auto k2 = oracle.extremal_graphs(2, GraphFamily({SmallGraph::empty(3)}));
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == SmallGraph::complete(2));
}

TEST_CASE("infeasible queries") {
  ExOracle oracle;
  SearchConstraint two;
  two.connectivity = Connectivity::kTwoConnected;
  CHECK_FALSE(oracle.ex_exact(2, GraphFamily({SmallGraph::complete(3)}), two).value);
  CHECK_FALSE(oracle.ex_exact(5, GraphFamily({}, 3), two).value);
  CHECK_FALSE(oracle.ex_exact(3, GraphFamily({SmallGraph::empty(3)})).value);
  CHECK_THROWS_AS(oracle.ex_exact(65, GraphFamily({SmallGraph::complete(3)})), CapacityError);
}

TEST_CASE("turan numbers of complete graphs") {
  ExOracle oracle;
  for (int r = 3; r <= 5; ++r) {
    for (int n = 1; n <= 9; ++n) CHECK(oracle.ex_exact(n, GraphFamily({SmallGraph::complete(r)})).value == turan_edges(n, r - 1));
  }
}

TEST_CASE("monotonicity") {
  ExOracle oracle;
  for (const auto& fam : battery()) {
    // growth in n needs members without isolated vertices: ex(3, {K2 + I2}) = 3 but ex(4, .) = 0
    bool isolated = false;
    for (const auto& m : fam.members()) isolated = isolated || m.min_degree() == 0;
    std::optional<int> prev;
    for (int n = 1; n <= 8; ++n) {
      SearchConstraint conn;
      conn.connectivity = Connectivity::kConnected;
      SearchConstraint two;
      two.connectivity = Connectivity::kTwoConnected;
      auto any = oracle.ex_exact(n, fam).value;
      auto c = oracle.ex_exact(n, fam, conn).value;
      auto t = oracle.ex_exact(n, fam, two).value;
      if (prev && any && !isolated) CHECK(*any >= *prev);
      if (c) CHECK(*c <= *any);
      if (t && c) CHECK(*t <= *c);
      prev = any;
    }
  }
  // adding a member never raises the value
  GraphFamily a({SmallGraph::complete(4)});
  GraphFamily b({SmallGraph::complete(4), SmallGraph::cycle(5)});
  for (int n = 3; n <= 8; ++n) CHECK(*oracle.ex_exact(n, b).value <= *oracle.ex_exact(n, a).value);
}

TEST_CASE("results do not depend on worker count") {
  OracleOptions one;
  OracleOptions many;
  many.workers = 8;
  ExOracle a(one);
  ExOracle b(many);
  for (const auto& fam : battery()) {
    ExRecord x = a.ex_exact(8, fam);
    ExRecord y = b.ex_exact(8, fam);
    CHECK(x.value == y.value);
    CHECK(x.witnesses == y.witnesses);
    CHECK(x.nodes == y.nodes);
  }
}

TEST_CASE("budget is enforced") {
  ExOracle oracle;
  SearchConstraint sc;
  sc.node_budget = 10;
  CHECK_THROWS_AS(oracle.ex_exact(9, GraphFamily({}, 6), sc), BudgetExceeded);
  CHECK_THROWS_AS(oracle.free_graphs(7, GraphFamily{}, 10), BudgetExceeded);
}

TEST_CASE("witness cap") {
  ExOracle oracle;
  SearchConstraint sc;
  sc.witness_cap = 5;
  ExRecord rec = oracle.ex_exact(8, GraphFamily({}, 3), sc);
  CHECK(rec.value == 7);
  CHECK(rec.witnesses.size() == 5);
  CHECK(rec.truncated);
  CHECK_THROWS_AS(oracle.extremal_graphs(8, GraphFamily({}, 3), sc), BudgetExceeded);
}

TEST_CASE("cache round trip") {
  const std::string path = "turan_cache_test.jsonl";
  std::remove(path.c_str());
  ExRecord first;
  {
    OracleOptions opts;
    opts.cache_path = path;
    ExOracle oracle(opts);
    first = oracle.ex_exact(6, GraphFamily({SmallGraph::complete(3)}, 5));
    ResultCache cache(path);
    auto hit = cache.lookup(first.key());
    REQUIRE(hit);
    CHECK(record_to_json_line(*hit) == record_to_json_line(first));
    CHECK_FALSE(cache.lookup("missing"));
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "{not json\n";
  }
  OracleOptions opts;
  opts.cache_path = path;
  ExOracle oracle(opts);
  // members listed in another order hit the same record
  ExRecord again = oracle.ex_exact(6, GraphFamily({SmallGraph(3, {{0, 2}, {2, 1}, {1, 0}})}, 5));
  CHECK(record_to_json_line(again) == record_to_json_line(first));
  CHECK(query_key(6, GraphFamily({SmallGraph::complete(3), SmallGraph::path(4)}), {}) ==
        query_key(6, GraphFamily({SmallGraph::path(4), SmallGraph::complete(3)}), {}));
  CHECK_THROWS(record_from_json_line("{}"));
  std::remove(path.c_str());

  ResultCache empty("turan_cache_absent.jsonl");
  CHECK_FALSE(empty.lookup(first.key()));
}
