#pragma once

#include <string>
#include <vector>

#include "nbspectra/rational.hpp"

namespace nbspectra {

// Monic characteristic polynomial det(x I - M) with exact rational
// coefficients, stored in ascending degree order (c[0] + c[1] x + ...).
struct CharPoly {
  std::vector<Rat> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rat eval(const Rat& x) const;
  bool is_root(const Rat& r) const { return eval(r) == 0; }
  // Exact multiplicity of a rational root via repeated synthetic division.
  int root_multiplicity(const Rat& r) const;
  // Exact divisibility by x^k - 1 (folds coefficients modulo x^k = 1).
  bool divisible_by_x_pow_k_minus_1(int k) const;

  // Denominator-cleared integer serialization: the least common multiple D of
  // all coefficient denominators followed by the integers D*c[i].  Equal
  // strings <=> equal polynomials.
  std::string integer_key() const;

  bool operator==(const CharPoly& o) const { return c == o.c; }
};

// Primary exact method: clear row denominators to an integer pencil
// det(x D - N), evaluate at x = 0..n by fraction-free (Bareiss) elimination
// over the integers, then interpolate exactly and divide by det(D).
CharPoly char_poly(const RationalMatrix& m);

// Independent O(n^4) oracle used to cross-check char_poly in the tests.
CharPoly char_poly_faddeev_leverrier(const RationalMatrix& m);

// Independent cofactor-expansion determinant oracle (exponential; n <= 9).
Rat determinant_cofactor(const RationalMatrix& m);

// Fraction-free integer determinant (row-major entries); exposed for tests.
Int bareiss_determinant(std::vector<Int> m, int n);

}  // namespace nbspectra
