#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nbspectra/nb.hpp"
#include "nbspectra/spectrum.hpp"

namespace nbspectra {

// Non-backtracking Laplacian Id - D^-1 A over the exact rationals, where A is
// the NB arc matrix and D the diagonal of NB out-degrees (deg(output) - 1).
struct NBLaplacian {
  NBGraph nb;
  RationalMatrix walk;  // D^-1 A, row-stochastic
  RationalMatrix lap;   // Id - walk
};

// Requires min degree >= 2 (otherwise D is singular).
NBLaplacian build_laplacian(const SimpleGraph& g);

// Multiplicity of the eigenvalue 0, exactly, against NB component structure.
struct ZeroMultiplicityReport {
  int charpoly_multiplicity = 0;
  int nb_weak_components = 0;
  int base_components = 0;
  bool base_has_cycle_component = false;
  bool matches_nb_components = false;
  // Only meaningful when no base component is a cycle.
  bool matches_base_components = false;
};
ZeroMultiplicityReport zero_multiplicity_check(const SimpleGraph& g);

// |sum of f| / ||f||_1 for an eigenpair with lambda != 0.
double eigenpair_sum_residual(const std::vector<Complex>& f);

enum class SymmetryClass { symmetric, antisymmetric, neither };
std::string symmetry_class_name(SymmetryClass c);

struct EigenfunctionReport {
  Complex lambda;
  SymmetryClass symmetry = SymmetryClass::neither;
  Complex sum_over_edges;
  Complex p_selfproduct;         // (f, f)_P = sum conj(f(e)) f(reversal(e))
  double flow_balance_residual = 0.0;  // only for symmetric/antisymmetric
  double lambda_imag_abs = 0.0;
};

// (x, y)_P = sum_i conj(x_i) * y_{rev(i)}.
Complex p_product(const NBGraph& nb, const std::vector<Complex>& x,
                  const std::vector<Complex>& y);

// Classifies by ||Pf -+ f||_inf <= tol * ||f||_inf; for a classified pair also
// evaluates the per-vertex flow balance: the average of f over outgoing arcs
// equals the average over incoming arcs.
EigenfunctionReport classify_symmetry(const NBLaplacian& L, Complex lambda,
                                      const std::vector<Complex>& f, double tol);

// Basis-independent symmetry structure of each eigenvalue cluster: dimensions
// of the symmetric and antisymmetric subspaces of the (numeric) eigenspace.
struct EigenspaceSymmetry {
  Complex lambda;
  int multiplicity = 0;
  int symmetric_dim = 0;
  int antisymmetric_dim = 0;
};
std::vector<EigenspaceSymmetry> eigenspace_symmetry_analysis(const NBLaplacian& L,
                                                             double cluster_radius = 1e-6);

// The matrix L P is exactly symmetric; symmetric eigenpairs of L are
// eigenpairs of L P, and descend to eigenpairs of the random-walk Laplacian
// of the line graph via f~({v,w}) = f([v,w]).
struct LPEquivalenceReport {
  bool lp_symmetric_exact = false;
  int symmetric_pairs = 0;
  double max_lp_residual = 0.0;           // ||(L P) f - lambda f||_inf
  double max_line_graph_residual = 0.0;   // ||L_LG f~ - lambda f~||_inf
  double max_line_graph_spectrum_gap = 0.0;  // matching symmetric lambdas into sigma(L_LG)
};
LPEquivalenceReport symmetric_LP_equivalence(const SimpleGraph& g, double tol);

// Reconstructs f(e) from its k-step neighborhood:
// f(e0) = (1-lambda)^-k  sum over NB paths e0 -> e1 -> ... -> ek of
//         (prod_t 1/out_weight(e_{t-1})) * f(ek);   requires lambda != 1.
double nk_determination_residual(const NBLaplacian& L, Complex lambda,
                                 const std::vector<Complex>& f, int k);

// P-orthogonality of eigenvectors: (f, g)_P = 0 whenever conj(lambda) != mu,
// and (f, f)_P = 0 for non-real lambda.
struct POrthogonalityReport {
  double max_cross_product = 0.0;      // worst |(f,g)_P| over checked pairs
  double max_nonreal_selfproduct = 0.0;
  int pairs_checked = 0;
  int degenerate_skipped = 0;  // same-cluster pairs (basis-dependent)
};
POrthogonalityReport p_orthogonality(const NBLaplacian& L, double tol);

// Singular-value envelope: for every eigenvalue lambda != 0 of L,
// s_2(aId - L) <= |lambda - a| <= s_max(aId - L); s_1 <= |lambda - a| holds
// for all eigenvalues of any matrix and is reported alongside.
struct EnvelopeReport {
  double a = 0.0;
  double s1 = 0.0, s2 = 0.0, s_top = 0.0;
  double min_dist = 0.0, max_dist = 0.0;  // of |lambda - a| over lambda != 0
  int excluded_zero_count = 0;
  bool lower_s2_holds = false;
  bool lower_s1_holds = false;
  bool upper_holds = false;
};
EnvelopeReport modulus_envelope(const SimpleGraph& g, double a, double tol);

}  // namespace nbspectra
