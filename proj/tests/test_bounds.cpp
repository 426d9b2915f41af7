#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "nbspectra/bounds.hpp"
#include "nbspectra/canonical.hpp"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/graph.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/nb.hpp"
#include "nbspectra/spectrum.hpp"

using namespace nbspectra;

TEST_CASE("gap report of petal(2,3): the upper bound is attained") {
  GapReport r = gap_report(petal_graph(2, 3), 1e-8);
  double expected = std::pow(3.0, -1.0 / 3.0);
  CHECK(r.epsilon == doctest::Approx(expected).epsilon(1e-10));
  CHECK(r.upper_bound_thm == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r.max_k == 3);
  CHECK(r.big_e == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.big_e_is_one);
  CHECK(r.lower_bound == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(r.lower_holds);
  CHECK(r.upper_chain_holds);
  CHECK(r.corollary_holds);
  CHECK_FALSE(r.excluded_cycle);
}

TEST_CASE("gap report of K4") {
  GapReport r = gap_report(complete_graph(4), 1e-8);
  CHECK(r.epsilon == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(r.big_e == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-10));
  CHECK(r.max_k == 1);
  // prod (deg-1)^(deg-1) = 2^8 over 2M - k = 11 arcs.
  CHECK(r.upper_bound_thm == doctest::Approx(std::pow(2.0, -8.0 / 11.0)).epsilon(1e-12));
  // Corollary bound (delta-1)^(-(delta-1)/Delta) = 2^(-2/3).
  CHECK(r.corollary_bound == doctest::Approx(std::pow(2.0, -2.0 / 3.0)).epsilon(1e-12));
  CHECK(r.lower_holds);
  CHECK(r.upper_chain_holds);
  CHECK(r.corollary_holds);
}

TEST_CASE("gap report of wheel(11)") {
  GapReport r = gap_report(wheel_graph(11), 1e-8);
  // prod (deg-1)^(deg-1) = 9^9 * 2^20 over 2M - 1 = 39.
  double expected = std::exp(-(9 * std::log(9.0) + 20 * std::log(2.0)) / 39.0);
  CHECK(r.upper_bound_thm == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r.upper_bound_thm == doctest::Approx(0.422100467712).epsilon(1e-9));
  CHECK(r.epsilon == doctest::Approx(0.26881464412).epsilon(1e-8));
  CHECK(r.lower_holds);
  CHECK(r.upper_chain_holds);
}

TEST_CASE("gap report excludes cycle components") {
  GapReport r = gap_report(cycle_graph(5), 1e-8);
  CHECK(r.excluded_cycle);
  CHECK_FALSE(r.note.empty());
}

TEST_CASE("petal spectra in closed form") {
  for (auto [p, k] : {std::pair{2, 3}, {2, 4}, {3, 3}, {2, 5}}) {
    std::vector<Complex> closed = petal_spectrum(p, k);
    REQUIRE(static_cast<int>(closed.size()) == 2 * p * k);
    std::vector<Complex> numeric = eigenvalues(build_laplacian(petal_graph(p, k)).lap).values;
    CHECK(multiset_match(closed, numeric, 1e-8));

    double r = std::pow(2.0 * p - 1.0, -1.0 / k);
    double eps = 1e300;
    for (const Complex& z : closed) eps = std::min(eps, std::abs(Complex(1, 0) - z));
    CHECK(eps == doctest::Approx(r).epsilon(1e-12));
  }
  CHECK_THROWS_AS(petal_spectrum(1, 3), domain_error);
  CHECK_THROWS_AS(petal_spectrum(2, 2), domain_error);
}

TEST_CASE("chordless cycle signatures of K4") {
  CycleSignatureReport r = cycle_signature_check(complete_graph(4), 1e-8);
  REQUIRE(r.cycles.size() == 4);  // the four triangles
  for (const CycleSignature& c : r.cycles) {
    CHECK(c.kind == CycleSignature::Kind::constant_degree);
    CHECK(c.d == 3);
    CHECK(c.length == 3);
    REQUIRE(c.predicted.size() == 1);  // odd cycle: only 1 - 1/(d-1)
    CHECK(c.predicted[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c.exact_checked);
    CHECK(c.holds);
  }
  CHECK(r.all_hold);

  // Four disjoint witnesses force the same eigenvalue, whose multiplicity
  // is only three: membership is per-cycle, never additive.
  CharPoly cp = char_poly(build_laplacian(complete_graph(4)).lap);
  CHECK(cp.root_multiplicity(Rat(1, 2)) == 3);
}

TEST_CASE("chordless cycle signatures of petal(2,3)") {
  CycleSignatureReport r = cycle_signature_check(petal_graph(2, 3), 1e-8);
  REQUIRE(r.cycles.size() == 2);  // the two petals
  for (const CycleSignature& c : r.cycles) {
    CHECK(c.kind == CycleSignature::Kind::one_big_vertex);
    CHECK(c.d == 4);
    CHECK(c.length == 3);
    // Odd cycles force only the lower value 1 - (d-1)^(-1/len); the upper
    // partner 1 + (d-1)^(-1/len) is claimed for even cycles alone (here it
    // happens to be an eigenvalue too, but not by this route).
    REQUIRE(c.predicted.size() == 1);
    CHECK(c.predicted[0] == doctest::Approx(1.0 - std::pow(3.0, -1.0 / 3.0)).epsilon(1e-12));
    CHECK(c.holds);
    CHECK(c.residual <= 1e-8);
  }
  CHECK(r.all_hold);
}

TEST_CASE("even constant-degree cycles force both 1 -+ 1/(d-1)") {
  // K(3,3) has chordless 4-cycles with constant degree 3.
  CycleSignatureReport r = cycle_signature_check(complete_bipartite_graph(3, 3), 1e-8);
  bool saw_even = false;
  for (const CycleSignature& c : r.cycles) {
    if (c.kind != CycleSignature::Kind::constant_degree) continue;
    REQUIRE(c.length == 4);
    REQUIRE(c.predicted.size() == 2);
    saw_even = true;
    CHECK(c.holds);
  }
  CHECK(saw_even);
  CHECK(r.all_hold);
}

TEST_CASE("mixed-degree cycles stay unclassified") {
  // C5 plus one chord: triangle {0,1,2} and quadrilateral {0,2,3,4}, each
  // with two vertices of degree 3 and the rest of degree 2.
  SimpleGraph house = SimpleGraph::from_edges(
      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}});
  CycleSignatureReport r = cycle_signature_check(house, 1e-8);
  REQUIRE(r.cycles.size() == 2);
  for (const CycleSignature& c : r.cycles)
    CHECK(c.kind == CycleSignature::Kind::unclassified);
  CHECK(r.all_hold);  // vacuous: nothing to predict
}

TEST_CASE("cycle components are degenerate for cycle signatures") {
  CycleSignatureReport r = cycle_signature_check(cycle_graph(6), 1e-8);
  REQUIRE(r.cycles.size() == 1);
  CHECK(r.cycles[0].kind == CycleSignature::Kind::degenerate_component);
  CHECK(r.all_hold);
}

TEST_CASE("independence numbers of C4 against the exhaustive oracle") {
  SimpleGraph c4 = cycle_graph(4);
  IndependenceReport r = independence_numbers(c4);

  NBGraph nb = build_nb(c4);
  int n = nb.size();
  REQUIRE(n == 8);
  int best_out = 0, best_strong = 0;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool out_ok = true, strong_ok = true;
    for (int i = 0; i < n && out_ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i + 1; j < n && out_ok; ++j) {
        if (!(mask >> j & 1)) continue;
        if (nb.verts[i].first == nb.verts[j].first) out_ok = false;
      }
    }
    if (!out_ok) continue;
    for (int i = 0; i < n && strong_ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j : nb.succ[i])
        if (mask >> j & 1) {
          strong_ok = false;
          break;
        }
    }
    int size = __builtin_popcount(static_cast<unsigned>(mask));
    best_out = std::max(best_out, size);
    if (strong_ok) best_strong = std::max(best_strong, size);
  }
  CHECK(r.alpha_out == best_out);
  CHECK(r.alpha_s_out == best_strong);
  CHECK(r.alpha_out == 4);
  CHECK(r.alpha_s_out == 4);
  CHECK(r.base_vertices_with_edges == 4);
}

TEST_CASE("independence numbers of K4") {
  IndependenceReport r = independence_numbers(complete_graph(4));
  CHECK(r.alpha_out == 4);
  CHECK(r.alpha_s_out == 4);
}

TEST_CASE("alpha_out always equals the number of non-isolated base vertices") {
  for (const SimpleGraph& g : enumerate_graphs(5, 1)) {
    if (2 * g.edge_count() > 28) continue;
    IndependenceReport r = independence_numbers(g);
    CHECK(r.alpha_out == r.base_vertices_with_edges);
    CHECK(r.alpha_s_out <= r.alpha_out);
    CHECK(r.alpha_s_out >= 1);
  }
}

TEST_CASE("inertia bounds for K4 at a=1") {
  InertiaReport r = inertia_bounds_check(complete_graph(4), 1.0, 1e-8);
  CHECK(r.alpha_out == 4);
  CHECK(r.alpha_s_out == 4);
  CHECK(r.all_hold);
  for (bool h : r.holds) CHECK(h);
  CHECK(r.gram_entries_exact);
  CHECK(r.smallest_two_match_remark);
  // delta = Delta = 3: thresholds sqrt(3/2) for the Laplacian singular
  // values and sqrt(1/2) for the walk singular values.
  CHECK(r.thresholds[0] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
  CHECK(r.thresholds[4] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("inertia bounds for petal(2,3) at a=0") {
  InertiaReport r = inertia_bounds_check(petal_graph(2, 3), 0.0, 1e-8);
  CHECK(r.all_hold);
  CHECK(r.gram_entries_exact);
  CHECK(r.smallest_two_match_remark);
}

TEST_CASE("Gram entry formulas hold across the small enumeration") {
  for (const SimpleGraph& g : enumerate_graphs(5, 2)) {
    InertiaReport r = inertia_bounds_check(g, 1.0, 1e-8);
    CHECK(r.gram_entries_exact);
    CHECK(r.all_hold);
  }
}

TEST_CASE("the two smallest walk singular values equal 1/(max degree - 1)") {
  for (const SimpleGraph& g : {complete_graph(4), petal_graph(2, 3), wheel_graph(6)}) {
    auto s = singular_values_ascending(build_laplacian(g).walk);
    double expected = 1.0 / (g.max_degree() - 1);
    CHECK(s[0] == doctest::Approx(expected).epsilon(1e-9));
    CHECK(s[1] == doctest::Approx(expected).epsilon(1e-9));
  }
}
