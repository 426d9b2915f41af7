#include <complex>
#include <random>
#include <vector>

#include "doctest.h"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/graph.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/rational.hpp"
#include "nbspectra/spectrum.hpp"

using namespace nbspectra;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat x(num(rng), den(rng));
      x.canonicalize();  // mpq_class(p, q) stores p/q verbatim
      m.at(i, j) = x;
    }
  return m;
}

}  // namespace

TEST_CASE("rational matrix arithmetic") {
  RationalMatrix id = RationalMatrix::identity(3);
  CHECK(id * id == id);
  CHECK(id.scaled(Rat(2)) - id == id);
  RationalMatrix m(2, 2);
  m.at(0, 1) = Rat(1, 2);
  CHECK_FALSE(m.is_symmetric());
  CHECK(m.transpose().at(1, 0) == Rat(1, 2));
  CHECK((m + m.transpose()).is_symmetric());
}

TEST_CASE("characteristic polynomial of the 2x2 identity") {
  CharPoly cp = char_poly(RationalMatrix::identity(2));
  CHECK(cp.c == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});  // x^2 - 2x + 1
  CHECK(cp.root_multiplicity(Rat(1)) == 2);
}

TEST_CASE("constant coefficient of the C3 Laplacian vanishes") {
  RationalMatrix lap = build_laplacian(cycle_graph(3)).lap;
  CharPoly cp = char_poly(lap);
  CHECK(cp.degree() == 6);
  CHECK(cp.c[0] == 0);
  CHECK(determinant_cofactor(lap) == 0);
  CHECK(cp == char_poly_faddeev_leverrier(lap));
}

TEST_CASE("three determinant and char-poly routes agree on random matrices") {
  std::mt19937 rng(20240817);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 3; ++rep) {
      RationalMatrix m = random_matrix(rng, n);
      CharPoly cp = char_poly(m);
      CHECK(cp == char_poly_faddeev_leverrier(m));
      // det(M) = (-1)^n * cp(0).
      Rat det = determinant_cofactor(m);
      CHECK((n % 2 ? -cp.c[0] : cp.c[0]) == det);
    }
  }
}

TEST_CASE("bareiss determinant over the integers") {
  // det [[2,3],[5,7]] = -1;  det [[1,2,3],[4,5,6],[7,8,10]] = -3.
  CHECK(bareiss_determinant({Int(2), Int(3), Int(5), Int(7)}, 2) == Int(-1));
  CHECK(bareiss_determinant({Int(1), Int(2), Int(3), Int(4), Int(5), Int(6), Int(7), Int(8),
                             Int(10)},
                            3) == Int(-3));
  CHECK(bareiss_determinant({Int(0), Int(1), Int(1), Int(0)}, 2) == Int(-1));
  CHECK(bareiss_determinant({Int(0), Int(0), Int(0), Int(0)}, 2) == Int(0));
}

TEST_CASE("polynomial root utilities") {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2.
  CharPoly cp{{Rat(2), Rat(-3), Rat(0), Rat(1)}};
  CHECK(cp.eval(Rat(1)) == 0);
  CHECK(cp.eval(Rat(0)) == 2);
  CHECK(cp.root_multiplicity(Rat(1)) == 2);
  CHECK(cp.root_multiplicity(Rat(-2)) == 1);
  CHECK(cp.root_multiplicity(Rat(3)) == 0);
  CHECK(cp.is_root(Rat(-2)));
  CHECK_FALSE(cp.is_root(Rat(1, 2)));
}

TEST_CASE("divisibility by x^k - 1") {
  // (x^2 - 1)(x^3 - 1) = x^5 - x^3 - x^2 + 1.
  CharPoly cp{{Rat(1), Rat(0), Rat(-1), Rat(-1), Rat(0), Rat(1)}};
  CHECK(cp.divisible_by_x_pow_k_minus_1(1));
  CHECK(cp.divisible_by_x_pow_k_minus_1(2));
  CHECK(cp.divisible_by_x_pow_k_minus_1(3));
  CHECK_FALSE(cp.divisible_by_x_pow_k_minus_1(4));
  CHECK_FALSE(cp.divisible_by_x_pow_k_minus_1(5));
}

TEST_CASE("integer key identifies polynomials exactly") {
  CharPoly a{{Rat(1, 2), Rat(1)}};
  CharPoly b{{Rat(1, 2), Rat(1)}};
  CharPoly c{{Rat(1, 3), Rat(1)}};
  CHECK(a.integer_key() == b.integer_key());
  CHECK(a.integer_key() != c.integer_key());
  CHECK(char_poly(RationalMatrix::identity(3)).integer_key() !=
        char_poly(RationalMatrix::identity(4)).integer_key());
}

TEST_CASE("numeric eigenvalues of a diagonal rational matrix") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = Rat(1, 2);
  m.at(1, 1) = Rat(3, 2);
  Spectrum s = eigenvalues(m);
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0].real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.values[1].real() == doctest::Approx(1.5).epsilon(1e-12));

  auto sv = singular_values_ascending(m);
  CHECK(sv[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sv[1] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("multiset matching is conjugation-order robust") {
  using C = std::complex<double>;
  std::vector<C> a{{1.0, 1e-9}, {1.0, -1e-9}};
  std::vector<C> b{{1.0, -1e-9}, {1.0, 1e-9}};
  CHECK(multiset_match(a, b, 1e-8));
  CHECK_FALSE(multiset_match({C(0, 0), C(0, 0)}, {C(0, 0), C(1, 0)}, 1e-8));
  CHECK_FALSE(multiset_match({C(0, 0)}, {C(0, 0), C(0, 0)}, 1e-8));
  CHECK(multiset_match_radius(a, b, 1.0) <= 2e-9);
}

TEST_CASE("spectrum clustering") {
  Spectrum s;
  s.values = {{1.0, 0.0}, {1.0 + 1e-9, 0.0}, {5.0, 0.0}};
  auto cl = s.clustered(1e-6);
  REQUIRE(cl.size() == 2);
  CHECK(cl[0].second == 2);
  CHECK(cl[1].second == 1);
}

TEST_CASE("eigensystem returns unit eigenvectors with residual columns") {
  RationalMatrix lap = build_laplacian(complete_graph(4)).lap;
  EigenSystem es = eigensystem(lap);
  REQUIRE(es.values.size() == 12);
  auto dense = lap.to_double_rowmajor();
  for (int k = 0; k < 12; ++k) {
    std::complex<double> lambda = es.values[k];
    double worst = 0;
    for (int i = 0; i < 12; ++i) {
      std::complex<double> acc = 0;
      for (int j = 0; j < 12; ++j) acc += dense[static_cast<std::size_t>(i) * 12 + j] * es.vectors(j, k);
      worst = std::max(worst, std::abs(acc - lambda * es.vectors(i, k)));
    }
    CHECK(worst <= 1e-8);
  }
}
