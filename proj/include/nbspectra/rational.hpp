#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nbspectra/errors.hpp"

namespace nbspectra {

using Int = mpz_class;
using Rat = mpq_class;

// Dense matrix over the exact rationals.
struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

  static RationalMatrix identity(int n);

  Rat& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rat& s) const;
  bool operator==(const RationalMatrix& o) const;

  bool is_symmetric() const { return *this == transpose(); }

  std::vector<double> to_double_rowmajor() const;

  // Matrix Market "array real general" with full-precision decimal output.
  std::string to_matrix_market() const;
};

std::string rat_to_string(const Rat& x);  // "p" or "p/q"

}  // namespace nbspectra
