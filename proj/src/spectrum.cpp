#include "nbspectra/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "nbspectra/errors.hpp"

namespace nbspectra {

std::vector<Complex> sorted_by_re_im(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return v;
}

std::vector<std::pair<Complex, int>> Spectrum::clustered(double radius) const {
  std::vector<std::pair<Complex, int>> out;
  std::vector<char> taken(values.size(), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (taken[i]) continue;
    // Single-linkage: grow the cluster until closed under the radius.
    std::vector<std::size_t> members{i};
    taken[i] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (taken[j]) continue;
        for (std::size_t m : members)
          if (std::abs(values[j] - values[m]) <= radius) {
            members.push_back(j);
            taken[j] = 1;
            grew = true;
            break;
          }
      }
    }
    Complex mean = 0;
    for (std::size_t m : members) mean += values[m];
    mean /= static_cast<double>(members.size());
    out.emplace_back(mean, static_cast<int>(members.size()));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.real() != y.first.real()) return x.first.real() < y.first.real();
    return x.first.imag() < y.first.imag();
  });
  return out;
}

namespace {

Eigen::MatrixXd to_eigen(const RationalMatrix& m) {
  Eigen::MatrixXd d(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) d(i, j) = m.at(i, j).get_d();
  return d;
}

std::string fingerprint(const Eigen::MatrixXd& d) {
  // Cheap content hash for error messages.
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j) {
      auto bits = std::hash<double>{}(d(i, j));
      h = (h ^ bits) * 1099511628211ull;
    }
  return std::to_string(d.rows()) + "x" + std::to_string(d.cols()) + "#" + std::to_string(h);
}

}  // namespace

Spectrum eigenvalues(const RationalMatrix& m) {
  if (m.rows != m.cols) throw domain_error("eigenvalues need a square matrix");
  if (m.rows == 0) return Spectrum{};
  Eigen::MatrixXd d = to_eigen(m);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(d, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eigensolver did not converge on matrix " + fingerprint(d));
  Spectrum s;
  s.values.resize(m.rows);
  for (int i = 0; i < m.rows; ++i) s.values[i] = solver.eigenvalues()(i);
  s.values = sorted_by_re_im(std::move(s.values));
  return s;
}

EigenSystem eigensystem(const RationalMatrix& m) {
  if (m.rows != m.cols) throw domain_error("eigensystem needs a square matrix");
  Eigen::MatrixXd d = to_eigen(m);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(d, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eigensolver did not converge on matrix " + fingerprint(d));
  EigenSystem es;
  es.values.resize(m.rows);
  for (int i = 0; i < m.rows; ++i) es.values[i] = solver.eigenvalues()(i);
  es.vectors = solver.eigenvectors();
  return es;
}

std::vector<double> singular_values_ascending(const RationalMatrix& m) {
  RationalMatrix gram = m.transpose() * m;
  Eigen::MatrixXd d = to_eigen(gram);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d);
  if (solver.info() != Eigen::Success)
    throw numeric_error("symmetric eigensolver did not converge on matrix " + fingerprint(d));
  std::vector<double> s(gram.rows);
  for (int i = 0; i < gram.rows; ++i) s[i] = std::sqrt(std::max(0.0, solver.eigenvalues()(i)));
  std::sort(s.begin(), s.end());
  return s;
}

namespace {

// Kuhn's augmenting-path bipartite matching on the graph
// {(i, j) : |a[i] - b[j]| <= tol}.
bool perfect_matching(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  std::size_t n = a.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a[i] - b[j]) <= tol) adj[i].push_back(static_cast<int>(j));
  std::vector<int> match_b(n, -1);
  std::vector<char> visited;
  std::function<bool(int)> try_kuhn = [&](int i) -> bool {
    for (int j : adj[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (match_b[j] < 0 || try_kuhn(match_b[j])) {
        match_b[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    visited.assign(n, 0);
    if (!try_kuhn(static_cast<int>(i))) return false;
  }
  return true;
}

}  // namespace

bool multiset_match(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return perfect_matching(a, b, tol);
}

double multiset_match_radius(const std::vector<Complex>& a, const std::vector<Complex>& b,
                             double cap) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  if (a.empty()) return 0.0;
  std::vector<double> dists;
  dists.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      double d = std::abs(x - y);
      if (d <= cap) dists.push_back(d);
    }
  std::sort(dists.begin(), dists.end());
  dists.erase(std::unique(dists.begin(), dists.end()), dists.end());
  // Smallest radius whose tolerance graph has a perfect matching.
  if (dists.empty() || !perfect_matching(a, b, dists.back()))
    return std::numeric_limits<double>::infinity();
  std::size_t lo = 0, hi = dists.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (perfect_matching(a, b, dists[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return dists[hi];
}

}  // namespace nbspectra
