#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "nbspectra/rational.hpp"

namespace nbspectra {

using Complex = std::complex<double>;

// Numeric spectrum of a (possibly non-symmetric) matrix, sorted by
// (real part, imaginary part).
struct Spectrum {
  std::vector<Complex> values;

  // Greedy single-linkage clustering: values within `radius` of a cluster
  // representative are merged; returns (representative, multiplicity) pairs.
  std::vector<std::pair<Complex, int>> clustered(double radius = 1e-6) const;
};

// Dense eigenvalues via the QR algorithm on the double image of m.
Spectrum eigenvalues(const RationalMatrix& m);

// Eigenvalues plus eigenvectors with matching column order (unsorted).
struct EigenSystem {
  std::vector<Complex> values;
  Eigen::MatrixXcd vectors;  // column k belongs to values[k], unit 2-norm
};
EigenSystem eigensystem(const RationalMatrix& m);

// Singular values in ascending order, computed as square roots of the
// eigenvalues of the exact Gram matrix m^T m (evaluated in doubles).
std::vector<double> singular_values_ascending(const RationalMatrix& m);

// True iff there is a perfect matching between a and b with all matched
// pairs within `tol` (exact bipartite matching, not a greedy pairing).
bool multiset_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol);

// Sorted distance-free comparison helper: max over matched pairs after an
// optimal assignment; +inf if sizes differ or no matching exists at `cap`.
double multiset_match_radius(const std::vector<Complex>& a, const std::vector<Complex>& b,
                             double cap);

std::vector<Complex> sorted_by_re_im(std::vector<Complex> v);

}  // namespace nbspectra
