#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nbspectra/graph.hpp"
#include "nbspectra/spectrum.hpp"

namespace nbspectra {

// Spectral gap from 1 of the NB Laplacian with all bounds:
//   epsilon = min |1 - lambda|,  big_e = max |1 - lambda| with one zero
//   eigenvalue removed;
//   lower bound 1/(max_degree - 1);
//   theorem upper bound (prod_v (deg v - 1)^(deg v - 1))^(-1/(2M - k)) with k
//   the maximal circular-partite order;
//   corollary bound (min_degree - 1)^(-(min_degree - 1)/max_degree);
//   conjectured bound 1/(min_degree - 1), reported but never asserted.
struct GapReport {
  double epsilon = 0.0;
  double big_e = 0.0;
  int max_k = 1;
  double lower_bound = 0.0;
  double upper_bound_thm = 0.0;
  double corollary_bound = 0.0;
  double conjecture_bound = 0.0;
  bool lower_holds = false;
  bool upper_chain_holds = false;  // epsilon <= thm bound <= big_e (with tol)
  bool big_e_is_one = false;       // checked when max_k > 1
  bool corollary_holds = false;
  bool conjecture_holds = false;   // informational
  bool excluded_cycle = false;     // some component is a cycle; see note
  std::string note;
};
GapReport gap_report(const SimpleGraph& g, double tol);

// Closed-form spectrum of the NB Laplacian of petal_graph(p, k), p >= 2,
// k >= 3: {1 - w : w^k = 1} each once, and {1 - r z : z^(2k) = 1} with
// r = (2p-1)^(-1/k), multiplicity p when z^k = 1 and p-1 when z^k = -1.
std::vector<Complex> petal_spectrum(int p, int k);

// Eigenvalues forced by chordless cycles: a chordless cycle with constant
// degree d >= 2 forces 1 - 1/(d-1) (and 1 + 1/(d-1) if even); a chordless
// cycle of length ell with one vertex of degree d >= 3 and the rest of degree
// 2 forces 1 -+ (d-1)^(-1/ell).
struct CycleSignature {
  std::vector<int> vertices;  // in cycle order
  int length = 0;
  enum class Kind { constant_degree, one_big_vertex, unclassified, degenerate_component } kind =
      Kind::unclassified;
  int d = 0;  // constant degree, or the big vertex degree
  std::vector<double> predicted;  // eigenvalues this cycle forces
  bool exact_checked = false;     // rational membership through the char poly
  bool holds = false;
  double residual = 0.0;  // numeric distance for irrational predictions
};
struct CycleSignatureReport {
  std::vector<CycleSignature> cycles;
  bool all_hold = false;  // every classified, non-degenerate cycle holds
};
CycleSignatureReport cycle_signature_check(const SimpleGraph& g, double tol);

// Exact independence numbers of the NB graph by branch and bound:
//   alpha_out   : no two chosen NB vertices share their input vertex;
//   alpha_s_out : additionally no NB arc between chosen vertices.
struct IndependenceReport {
  int alpha_out = 0;
  int alpha_s_out = 0;
  int base_vertices_with_edges = 0;  // alpha_out always equals this
};
IndependenceReport independence_numbers(const SimpleGraph& g);

// The six singular-value counting bounds, with the exact Gram-entry
// cross-check for L^T L and (Id - L)^T (Id - L).
struct InertiaReport {
  double a = 1.0;
  int alpha_out = 0;
  int alpha_s_out = 0;
  // #{i : s_i <= / >= threshold} for each of the six bounds, in the order:
  // s(L) vs sqrt(delta/(delta-1)), s(L) vs sqrt(Delta/(Delta-1)),
  // s(aId-L) vs sqrt((a-1)^2 + 1/(delta-1)), s(aId-L) vs sqrt((a-1)^2 + 1/(Delta-1)),
  // s(Id-L) vs sqrt(1/(delta-1)), s(Id-L) vs sqrt(1/(Delta-1)).
  double thresholds[6] = {0, 0, 0, 0, 0, 0};
  int counts[6] = {0, 0, 0, 0, 0, 0};
  bool holds[6] = {false, false, false, false, false, false};
  bool all_hold = false;
  bool gram_entries_exact = false;  // formula check for both Gram matrices
  // s_1(Id - L) = s_2(Id - L) = 1/(max_degree - 1), numerically.
  bool smallest_two_match_remark = false;
};
InertiaReport inertia_bounds_check(const SimpleGraph& g, double a, double tol);

}  // namespace nbspectra
