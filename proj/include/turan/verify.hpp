#pragma once

#include <vector>

#include "turan/graph.hpp"
#include "turan/oracle.hpp"
#include "turan/report.hpp"

namespace turan {

inline constexpr int kLemmaDefaultMaxOrder = 7;
inline constexpr int kLemmaExtendedMaxOrder = 8;

/// Exterior degree bound d_C(u) <= floor(c/2) over every connected graph on
/// at most n_max vertices with 3 <= c < n, every longest cycle C, every u off C.
VerificationReport verify_degree_fact(int n_max, ExOracle& oracle);

/// e(G-C) + e(G-C, C) <= floor(c/2)(n - c) over every graph with a cycle.
VerificationReport verify_bondy(int n_max, ExOracle& oracle);

/// The refined exterior bound with the A_{floor(c/2)} term, over 2-connected
/// graphs with 4 <= c <= n - 1. Also counts members of A with a neighbour
/// off C, which the argument shows cannot exist.
VerificationReport verify_exterior_strengthened(int n_max, ExOracle& oracle);

/// Edge bound inside a longest cycle, for c in {k-1, k-2} per k in k_grid.
/// Hosts are joins H v I_m built so that the hypotheses on |A| hold, plus
/// every F-free graph on at most exhaustive_n_max vertices. Hosts failing a
/// hypothesis are skipped and counted.
VerificationReport verify_cycle_edge_lemma(const SmallGraph& f, const std::vector<int>& k_grid, ExOracle& oracle,
                                           int exhaustive_n_max = kLemmaDefaultMaxOrder);

/// ex(n, {C>=k, K_r}) against f(n,k,r), max{f, e(G1)} or e(G2) depending on
/// r, with the lower-bound constructions certified at every n.
VerificationReport verify_kr_theorems(int k, int r, const std::vector<int>& n_range, ExOracle& oracle);

/// ex_2conn(n, {C>=k, F}) against ex(t, H) + t(n - t); reports the gap per n
/// (the observed l for even k) and certifies T v I_{n-t} for every T in
/// EX(t, H) up to construction_n_max. Runs the edge-count lemma on every
/// 2-connected free host on at most corollary_n_max vertices.
VerificationReport verify_two_connected(int k, const SmallGraph& f, const std::vector<int>& n_range, ExOracle& oracle,
                                        int construction_n_max = 12, int corollary_n_max = 8);

/// ex(n, {C>=k, F}) <= (n-1) max{(k-2)/2, ex(k-1,F)/(k-2)} at every n, the
/// table of d_n = ex(n) - n s, and the two lower-bound constructions.
/// Non-2-connected F is rejected unless allow_non_two_connected.
VerificationReport verify_general(int k, const SmallGraph& f, const std::vector<int>& n_range, ExOracle& oracle,
                                  bool allow_non_two_connected = false);

/// Recomputes a violation from its witness and parameters. True when the
/// failure reproduces with the recorded sides.
bool recheck_violation(const Violation& v, ExOracle& oracle);

}  // namespace turan
