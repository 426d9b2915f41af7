#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "nbspectra/canonical.hpp"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/graph.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/nb.hpp"
#include "nbspectra/spectrum.hpp"

using namespace nbspectra;

namespace {

std::vector<Complex> lap_eigenvalues(const SimpleGraph& g) {
  return eigenvalues(build_laplacian(g).lap).values;
}

}  // namespace

TEST_CASE("the NB Laplacian of K4 has the known exact eigenvalue multiset") {
  SimpleGraph k4 = complete_graph(4);
  NBLaplacian L = build_laplacian(k4);

  // Exact rational roots: 0 (x1), 1/2 (x3), 3/2 (x2).
  CharPoly cp = char_poly(L.lap);
  CHECK(cp.root_multiplicity(Rat(0)) == 1);
  CHECK(cp.root_multiplicity(Rat(1, 2)) == 3);
  CHECK(cp.root_multiplicity(Rat(3, 2)) == 2);
  CHECK_FALSE(cp.is_root(Rat(1)));

  // Remaining six roots: (5 +- i sqrt 7)/4, multiplicity 3 each.
  std::vector<Complex> expected = {
      {0, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}, {1.5, 0}, {1.5, 0},
      {1.25, std::sqrt(7.0) / 4}, {1.25, std::sqrt(7.0) / 4}, {1.25, std::sqrt(7.0) / 4},
      {1.25, -std::sqrt(7.0) / 4}, {1.25, -std::sqrt(7.0) / 4}, {1.25, -std::sqrt(7.0) / 4}};
  CHECK(multiset_match(lap_eigenvalues(k4), expected, 1e-9));
}

TEST_CASE("the NB Laplacian of C4 has spectrum {0, 1+-i, 2} twice over") {
  std::vector<Complex> expected = {{0, 0}, {0, 0}, {2, 0}, {2, 0},
                                   {1, 1}, {1, 1}, {1, -1}, {1, -1}};
  CHECK(multiset_match(lap_eigenvalues(cycle_graph(4)), expected, 1e-9));
}

TEST_CASE("walk matrix rows sum to one exactly") {
  for (const SimpleGraph& g : enumerate_graphs(5, 2)) {
    NBLaplacian L = build_laplacian(g);
    for (int i = 0; i < L.nb.size(); ++i) {
      Rat s(0);
      for (int j = 0; j < L.nb.size(); ++j) s += L.walk.at(i, j);
      CHECK(s == 1);
    }
  }
}

TEST_CASE("reversal conjugation transposes the Laplacian exactly") {
  for (const SimpleGraph& g : enumerate_graphs(5, 2)) {
    NBLaplacian L = build_laplacian(g);
    RationalMatrix p = reversal_matrix(L.nb);
    CHECK(p * L.lap * p == L.lap.transpose());
  }
}

TEST_CASE("Laplacian needs minimum degree 2") {
  CHECK_THROWS_AS(build_laplacian(star_graph(3)), domain_error);
  CHECK_THROWS_AS(build_laplacian(path_graph(2)), domain_error);
}

TEST_CASE("multiplicity of the root 0 counts NB components") {
  ZeroMultiplicityReport k4 = zero_multiplicity_check(complete_graph(4));
  CHECK(k4.charpoly_multiplicity == 1);
  CHECK(k4.nb_weak_components == 1);
  CHECK(k4.matches_nb_components);
  CHECK(k4.matches_base_components);

  // A cycle component doubles in the NB graph.
  ZeroMultiplicityReport c6 = zero_multiplicity_check(cycle_graph(6));
  CHECK(c6.charpoly_multiplicity == 2);
  CHECK(c6.nb_weak_components == 2);
  CHECK(c6.base_components == 1);
  CHECK(c6.base_has_cycle_component);
  CHECK(c6.matches_nb_components);

  ZeroMultiplicityReport two = zero_multiplicity_check(
      disjoint_union(petal_graph(2, 3), complete_graph(4)));
  CHECK(two.charpoly_multiplicity == 2);
  CHECK(two.nb_weak_components == 2);
  CHECK(two.base_components == 2);
  CHECK(two.matches_nb_components);
  CHECK(two.matches_base_components);
}

TEST_CASE("eigenfunctions with nonzero eigenvalue sum to zero") {
  for (const SimpleGraph& g : {complete_graph(4), petal_graph(2, 3), wheel_graph(6)}) {
    NBLaplacian L = build_laplacian(g);
    EigenSystem es = eigensystem(L.lap);
    for (std::size_t k = 0; k < es.values.size(); ++k) {
      if (std::abs(es.values[k]) <= 1e-6) continue;
      std::vector<Complex> f(L.nb.size());
      for (int i = 0; i < L.nb.size(); ++i) f[i] = es.vectors(i, static_cast<int>(k));
      CHECK(eigenpair_sum_residual(f) <= 1e-6);
    }
  }
}

TEST_CASE("symmetry classification and flow balance") {
  NBLaplacian L = build_laplacian(complete_graph(4));
  EigenSystem es = eigensystem(L.lap);
  int classified = 0;
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    std::vector<Complex> f(L.nb.size());
    for (int i = 0; i < L.nb.size(); ++i) f[i] = es.vectors(i, static_cast<int>(k));
    EigenfunctionReport r = classify_symmetry(L, es.values[k], f, 1e-8);
    if (r.symmetry == SymmetryClass::neither) continue;
    ++classified;
    CHECK(r.lambda_imag_abs <= 1e-8);
    CHECK(r.flow_balance_residual <= 1e-6);
  }
  CHECK(classified >= 1);  // at least the constant eigenfunction at 0
}

TEST_CASE("eigenspace symmetry dimensions of K4") {
  NBLaplacian L = build_laplacian(complete_graph(4));
  auto clusters = eigenspace_symmetry_analysis(L);
  int sym_total = 0;
  for (const auto& c : clusters) {
    CHECK(c.symmetric_dim + c.antisymmetric_dim <= c.multiplicity);
    sym_total += c.symmetric_dim;
    if (std::abs(c.lambda) < 1e-8) {
      CHECK(c.multiplicity == 1);
      CHECK(c.symmetric_dim == 1);  // the constant eigenfunction
    }
    // 1/2 is not in the line-graph walk spectrum {0, 1, 3/2}, so its
    // eigenspace carries no symmetric part.
    if (std::abs(c.lambda - Complex(0.5, 0)) < 1e-8) CHECK(c.symmetric_dim == 0);
  }
  CHECK(sym_total == 3);  // 0 once and 3/2 twice, matching sigma(L_LG)
}

TEST_CASE("symmetric eigenpairs transfer to the line-graph walk Laplacian") {
  for (const SimpleGraph& g : {complete_graph(4), petal_graph(2, 3), wheel_graph(5)}) {
    LPEquivalenceReport r = symmetric_LP_equivalence(g, 1e-8);
    CHECK(r.lp_symmetric_exact);
    CHECK(r.symmetric_pairs >= 1);
    CHECK(r.max_lp_residual <= 1e-7);
    CHECK(r.max_line_graph_residual <= 1e-7);
    CHECK(r.max_line_graph_spectrum_gap <= 1e-8);
  }
}

TEST_CASE("k-step neighborhood determination of eigenfunction values") {
  for (const SimpleGraph& g : {complete_graph(4), petal_graph(2, 3)}) {
    NBLaplacian L = build_laplacian(g);
    EigenSystem es = eigensystem(L.lap);
    for (std::size_t kv = 0; kv < es.values.size(); ++kv) {
      if (std::abs(Complex(1, 0) - es.values[kv]) <= 1e-6) continue;
      std::vector<Complex> f(L.nb.size());
      for (int i = 0; i < L.nb.size(); ++i) f[i] = es.vectors(i, static_cast<int>(kv));
      for (int k = 1; k <= 3; ++k)
        CHECK(nk_determination_residual(L, es.values[kv], f, k) <= 1e-7);
    }
  }
}

TEST_CASE("P-orthogonality of eigenvectors") {
  POrthogonalityReport r = p_orthogonality(build_laplacian(complete_graph(4)), 1e-6);
  CHECK(r.pairs_checked > 0);
  CHECK(r.max_cross_product <= 1e-8);
  CHECK(r.max_nonreal_selfproduct <= 1e-8);
}

TEST_CASE("P-product pairs values on reversed edges") {
  NBGraph nb = build_nb(cycle_graph(4));
  std::vector<Complex> x(8, Complex(0, 0)), y(8, Complex(0, 0));
  x[0] = Complex(2, 1);
  y[nb.rev(0)] = Complex(3, 0);
  CHECK(p_product(nb, x, y) == Complex(2, -1) * Complex(3, 0));
}

TEST_CASE("modulus envelope of K4") {
  EnvelopeReport a1 = modulus_envelope(complete_graph(4), 1.0, 1e-8);
  CHECK(a1.s2 == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(a1.min_dist == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(a1.max_dist == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-9));
  CHECK(a1.s_top == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(a1.lower_s2_holds);
  CHECK(a1.lower_s1_holds);
  CHECK(a1.upper_holds);
  CHECK(a1.excluded_zero_count == 1);

  EnvelopeReport a0 = modulus_envelope(complete_graph(4), 0.0, 1e-8);
  CHECK(a0.lower_s2_holds);
  CHECK(a0.upper_holds);
  CHECK(a0.s_top == doctest::Approx(1.68614066163).epsilon(1e-6));
}

TEST_CASE("the a=1/2 envelope lower bound fails on the diamond") {
  SimpleGraph diamond = SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  EnvelopeReport r = modulus_envelope(diamond, 0.5, 1e-8);
  CHECK(r.min_dist == doctest::Approx(0.089754512).epsilon(1e-6));
  CHECK(r.s2 == doctest::Approx(0.190983006).epsilon(1e-6));
  CHECK_FALSE(r.lower_s2_holds);
  CHECK(r.lower_s1_holds);
  CHECK(r.upper_holds);
}

TEST_CASE("the walk matrix transfers to the arc matrix for regular graphs") {
  SimpleGraph k4 = complete_graph(4);
  NBLaplacian L = build_laplacian(k4);
  RationalMatrix b = nb_arc_matrix(L.nb);
  CHECK(L.walk == b.scaled(Rat(1, 2)));  // degree 3, so D = (3-1) Id
}

TEST_CASE("envelope needs a connected NB graph") {
  CHECK_THROWS_AS(modulus_envelope(cycle_graph(5), 1.0, 1e-8), domain_error);
}
