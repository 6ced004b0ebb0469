#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "turan/cache.hpp"
#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/families.hpp"
#include "turan/graph6.hpp"
#include "turan/oracle.hpp"
#include "turan/structure.hpp"
#include "turan/verify.hpp"

using namespace turan;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

void print_graph(const SmallGraph& g) {
  std::cout << graph6_encode(g) << "  n=" << g.order() << " e=" << g.size() << "\n";
}

void print_family(const GraphFamily& fam) {
  for (const auto& m : fam.members()) print_graph(m);
}

std::vector<int> n_list(int from, int to) {
  if (from > to) throw std::invalid_argument("empty n range");
  std::vector<int> out;
  for (int n = from; n <= to; ++n) out.push_back(n);
  return out;
}

int emit(const VerificationReport& r, const std::string& format, const std::string& out) {
  const std::string text = emit_report(r, report_format_from_string(format));
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << text;
  }
  if (!r.pass()) {
    std::size_t rechecked = 0;
    ExOracle oracle;
    for (const auto& v : r.violations) rechecked += recheck_violation(v, oracle);
    std::cerr << r.violations.size() << " violation(s), " << rechecked << " reproduced from their witnesses\n";
  }
  return r.pass() ? kExitPass : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Turan numbers for long cycles plus a fixed graph"};
  app.require_subcommand(1);
  app.fallthrough();
  int workers = 0;
  app.add_option("--workers", workers, "worker threads (default: hardware)");

  // ex
  auto* ex = app.add_subcommand("ex", "exact ex(n, F) by exhaustive search");
  int ex_n = 0;
  int ex_k = 0;
  std::vector<std::string> ex_forbid;
  bool ex_two = false;
  bool ex_conn = false;
  bool ex_wit = false;
  bool ex_json = false;
  ex->add_option("--n", ex_n, "order")->required();
  ex->add_option("--forbid-cycles-geq", ex_k, "forbid cycles of length >= K");
  ex->add_option("--forbid", ex_forbid, "forbidden graph (g6:... or builtin name)");
  ex->add_flag("--two-connected", ex_two, "restrict to 2-connected graphs");
  ex->add_flag("--connected", ex_conn, "restrict to connected graphs");
  ex->add_flag("--witnesses", ex_wit, "print the extremal graphs");
  ex->add_flag("--json", ex_json, "print the cache record");

  // construct
  auto* construct = app.add_subcommand("construct", "extremal constructions");
  construct->require_subcommand(1);
  int c_n = 0, c_k = 0, c_r = 0, c_m = 0;
  std::vector<std::string> c_graphs;
  std::vector<int> c_anchors;
  auto* c_turan = construct->add_subcommand("turan", "T(n, r)");
  c_turan->add_option("--n", c_n)->required();
  c_turan->add_option("--r", c_r)->required();
  auto* c_fnkr = construct->add_subcommand("fnkr", "F(n, k, r)");
  c_fnkr->add_option("--n", c_n)->required();
  c_fnkr->add_option("--k", c_k)->required();
  c_fnkr->add_option("--r", c_r)->required();
  auto* c_g1 = construct->add_subcommand("g1", "K_t v I_{n-t}");
  c_g1->add_option("--n", c_n)->required();
  c_g1->add_option("--k", c_k)->required();
  auto* c_g2 = construct->add_subcommand("g2", "T(t, r-2) v I_{n-t}");
  c_g2->add_option("--n", c_n)->required();
  c_g2->add_option("--k", c_k)->required();
  c_g2->add_option("--r", c_r)->required();
  auto* c_join = construct->add_subcommand("join", "T v I_{n-|T|}");
  c_join->add_option("--graph", c_graphs, "T")->required()->expected(1);
  c_join->add_option("--n", c_n)->required();
  auto* c_chain = construct->add_subcommand("chain", "parts glued at one vertex");
  c_chain->add_option("--graph", c_graphs, "part, repeatable")->required();
  c_chain->add_option("--anchor", c_anchors, "anchor vertex per part");
  auto* c_friend = construct->add_subcommand("friendship", "m triangles at one vertex");
  c_friend->add_option("--m", c_m)->required();

  // family
  auto* family = app.add_subcommand("family", "derived families of F");
  family->require_subcommand(1);
  std::string f_graph;
  bool f_full = false;
  auto* f_cov = family->add_subcommand("coverings", "vertex coverings of F");
  auto* f_h = family->add_subcommand("h", "{F[S] : S a vertex covering}");
  auto* f_hp = family->add_subcommand("hprime", "{F - {u,v} : uv an edge}");
  auto* f_p = family->add_subcommand("pvalue", "p(F)");
  for (auto* sub : {f_cov, f_h, f_hp, f_p}) sub->add_option("--graph", f_graph, "F")->required();
  f_h->add_flag("--full", f_full, "keep non-minimal members");

  // verify
  auto* verify = app.add_subcommand("verify", "property checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  int v_nmax = kLemmaDefaultMaxOrder;
  bool v_extended = false;
  std::string v_graph = "K4";
  int v_k = 7, v_r = 5, v_from = 0, v_to = 0;
  std::vector<int> v_kgrid{5, 6, 7, 8, 9};
  int v_exhaustive = kLemmaDefaultMaxOrder;
  int v_construct = 12, v_corollary = 8;
  bool v_allow = false;
  std::string v_format = "json";
  std::string v_out;
  verify->add_option("--format", v_format, "json, csv or markdown");
  verify->add_option("--out", v_out, "write the report to a file");
  auto* v_fact = verify->add_subcommand("fact", "d_C(u) <= floor(c/2)");
  auto* v_bondy = verify->add_subcommand("bondy", "exterior edge bound");
  auto* v_ext = verify->add_subcommand("exterior", "strengthened exterior bound");
  for (auto* sub : {v_fact, v_bondy, v_ext}) {
    sub->add_option("--n-max", v_nmax, "largest order");
    sub->add_flag("--extended", v_extended, "run through n = 8");
  }
  auto* v_ce = verify->add_subcommand("cycle-edge", "edges inside a longest cycle");
  v_ce->add_option("--graph", v_graph, "F");
  v_ce->add_option("--k-grid", v_kgrid, "values of k")->delimiter(',');
  v_ce->add_option("--exhaustive-n-max", v_exhaustive, "largest exhaustive host");
  auto* v_kr = verify->add_subcommand("kr", "ex(n, {C>=k, K_r})");
  auto* v_two = verify->add_subcommand("two-conn", "ex_2conn(n, {C>=k, F})");
  auto* v_gen = verify->add_subcommand("general", "ex(n, {C>=k, F}) for even k");
  for (auto* sub : {v_kr, v_two, v_gen}) {
    sub->add_option("--k", v_k, "cycle threshold");
    sub->add_option("--n-from", v_from, "first order")->required();
    sub->add_option("--n-to", v_to, "last order")->required();
  }
  v_kr->add_option("--r", v_r, "clique order");
  for (auto* sub : {v_two, v_gen}) sub->add_option("--graph", v_graph, "F");
  v_two->add_option("--construction-n-max", v_construct, "largest certified construction");
  v_two->add_option("--corollary-n-max", v_corollary, "largest enumerated host");
  v_gen->add_flag("--allow-non-two-connected", v_allow, "accept F with a cut vertex");

  // report
  auto* report = app.add_subcommand("report", "convert a JSON report");
  std::string r_format = "markdown";
  std::string r_input;
  report->add_option("--format", r_format, "json, csv or markdown")->required();
  report->add_option("--input", r_input, "JSON report (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitError;
  }

  try {
    OracleOptions opts = OracleOptions::from_env();
    if (workers > 0) opts.workers = workers;

    if (ex->parsed()) {
      std::vector<SmallGraph> members;
      for (const auto& s : ex_forbid) members.push_back(parse_graph_spec(s));
      GraphFamily fam(members, ex_k > 0 ? std::optional<int>(ex_k) : std::nullopt);
      SearchConstraint sc;
      sc.connectivity = ex_two ? Connectivity::kTwoConnected : ex_conn ? Connectivity::kConnected : Connectivity::kAny;
      sc.want_witnesses = ex_wit || ex_json;
      ExOracle oracle(opts);
      const ExRecord rec = oracle.ex_exact(ex_n, fam, sc);
      if (ex_json) {
        std::cout << record_to_json_line(rec) << "\n";
        return kExitPass;
      }
      std::cout << "ex(" << ex_n << ", " << describe(fam) << ") [" << to_string(sc.connectivity)
                << "] = " << (rec.value ? std::to_string(*rec.value) : "none") << "\n";
      if (ex_wit) {
        std::cout << rec.witnesses.size() << " extremal graph(s)" << (rec.truncated ? " (truncated)" : "") << "\n";
        for (const auto& w : rec.witnesses) print_graph(w);
      }
      return kExitPass;
    }

    if (construct->parsed()) {
      auto report_graph = [](const SmallGraph& g, long long formula) {
        print_graph(g);
        std::cout << "formula edges: " << formula << (formula == g.size() ? " (match)" : " (MISMATCH)") << "\n";
        return formula == g.size() ? kExitPass : kExitViolations;
      };
      // beyond 64 vertices only the formula is reported
      auto too_big = [](int n, long long formula) {
        if (n <= SmallGraph::kMaxVertices) return false;
        std::cout << "n=" << n << " exceeds 64 vertices; formula edges: " << formula << "\n";
        return true;
      };
      if (c_turan->parsed()) {
        if (too_big(c_n, turan_edges(c_n, c_r))) return kExitPass;
        return report_graph(turan_graph(c_n, c_r), turan_edges(c_n, c_r));
      }
      if (c_fnkr->parsed()) {
        if (too_big(c_n, f_nkr_value(c_n, c_k, c_r))) return kExitPass;
        return report_graph(f_nkr_graph(c_n, c_k, c_r), f_nkr_value(c_n, c_k, c_r));
      }
      if (c_g1->parsed()) {
        if (too_big(c_n, g1_edges(c_n, c_k))) return kExitPass;
        return report_graph(g1_graph(c_n, c_k), g1_edges(c_n, c_k));
      }
      if (c_g2->parsed()) {
        if (too_big(c_n, g2_edges(c_n, c_k, c_r))) return kExitPass;
        return report_graph(g2_graph(c_n, c_k, c_r), g2_edges(c_n, c_k, c_r));
      }
      if (c_join->parsed()) {
        const SmallGraph t = parse_graph_spec(c_graphs.at(0));
        const long long formula = t.size() + 1LL * t.order() * (c_n - t.order());
        if (too_big(c_n, formula)) return kExitPass;
        const SmallGraph g = join_extremal(t, c_n);
        std::cout << "circumference bound: " << join_circumference_bound(t.order(), c_n - t.order()) << "\n";
        return report_graph(g, formula);
      }
      if (c_chain->parsed()) {
        std::vector<SmallGraph> parts;
        long long formula = 0;
        for (const auto& s : c_graphs) {
          parts.push_back(parse_graph_spec(s));
          formula += parts.back().size();
        }
        return report_graph(chain_amalgam(parts, c_anchors), formula);
      }
      if (c_friend->parsed()) return report_graph(friendship_graph(c_m), 3LL * c_m);
    }

    if (family->parsed()) {
      const SmallGraph f = parse_graph_spec(f_graph);
      if (f_cov->parsed()) {
        for (Bits s : vertex_coverings(f)) {
          std::cout << "{";
          bool first = true;
          for_each_bit(s, [&](int v) {
            std::cout << (first ? "" : ",") << v;
            first = false;
          });
          std::cout << "}\n";
        }
      } else if (f_h->parsed()) {
        print_family(covering_family(f, !f_full));
      } else if (f_hp->parsed()) {
        print_family(edge_deleted_family(f));
      } else if (f_p->parsed()) {
        std::cout << p_value(f).to_string() << "\n";
      }
      return kExitPass;
    }

    if (verify->parsed()) {
      ExOracle oracle(opts);
      const int n_max = v_extended ? kLemmaExtendedMaxOrder : v_nmax;
      VerificationReport r;
      if (v_fact->parsed()) r = verify_degree_fact(n_max, oracle);
      if (v_bondy->parsed()) r = verify_bondy(n_max, oracle);
      if (v_ext->parsed()) r = verify_exterior_strengthened(n_max, oracle);
      if (v_ce->parsed()) r = verify_cycle_edge_lemma(parse_graph_spec(v_graph), v_kgrid, oracle, v_exhaustive);
      if (v_kr->parsed()) r = verify_kr_theorems(v_k, v_r, n_list(v_from, v_to), oracle);
      if (v_two->parsed()) {
        r = verify_two_connected(v_k, parse_graph_spec(v_graph), n_list(v_from, v_to), oracle, v_construct, v_corollary);
      }
      if (v_gen->parsed()) r = verify_general(v_k, parse_graph_spec(v_graph), n_list(v_from, v_to), oracle, v_allow);
      return emit(r, v_format, v_out);
    }

    if (report->parsed()) {
      std::stringstream buf;
      if (r_input.empty()) {
        buf << std::cin.rdbuf();
      } else {
        std::ifstream in(r_input);
        if (!in) throw std::runtime_error("cannot read " + r_input);
        buf << in.rdbuf();
      }
      const VerificationReport r = report_from_json(buf.str());
      std::cout << emit_report(r, report_format_from_string(r_format));
      return r.pass() ? kExitPass : kExitViolations;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitError;
  } catch (const HypothesisViolated& e) {
    std::cerr << "hypothesis violated: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitPass;
}
