#include "nbspectra/laplacian.hpp"

#include <algorithm>
#include <cmath>

#include "nbspectra/charpoly.hpp"

namespace nbspectra {

NBLaplacian build_laplacian(const SimpleGraph& g) {
  if (g.min_degree() < 2)
    throw domain_error("the NB Laplacian needs min degree >= 2 (out-degree matrix is singular)");
  NBLaplacian L;
  L.nb = build_nb(g);
  int n = L.nb.size();
  L.walk = RationalMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j : L.nb.succ[i]) L.walk.at(i, j) = Rat(1, L.nb.out_weight[i]);
  L.lap = RationalMatrix::identity(n) - L.walk;
  return L;
}

ZeroMultiplicityReport zero_multiplicity_check(const SimpleGraph& g) {
  auto L = build_laplacian(g);
  ZeroMultiplicityReport r;
  r.charpoly_multiplicity = char_poly(L.lap).root_multiplicity(Rat(0));
  r.nb_weak_components = L.nb.weak_component_count();
  r.base_components = g.component_count();
  r.base_has_cycle_component = g.has_cycle_component();
  r.matches_nb_components = r.charpoly_multiplicity == r.nb_weak_components;
  r.matches_base_components = r.charpoly_multiplicity == r.base_components;
  return r;
}

double eigenpair_sum_residual(const std::vector<Complex>& f) {
  Complex sum = 0;
  double norm1 = 0;
  for (const auto& x : f) {
    sum += x;
    norm1 += std::abs(x);
  }
  if (norm1 == 0) return 0;
  return std::abs(sum) / norm1;
}

std::string symmetry_class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::symmetric:
      return "symmetric";
    case SymmetryClass::antisymmetric:
      return "antisymmetric";
    default:
      return "neither";
  }
}

Complex p_product(const NBGraph& nb, const std::vector<Complex>& x,
                  const std::vector<Complex>& y) {
  Complex acc = 0;
  for (int i = 0; i < nb.size(); ++i) acc += std::conj(x[i]) * y[nb.rev(i)];
  return acc;
}

namespace {

double inf_norm(const std::vector<Complex>& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

// Flow balance at each NB vertex [v,w]: the average of f over arcs leaving
// [v,w] equals the average of f over arcs entering [v,w].
double flow_balance_residual(const NBGraph& nb, const std::vector<Complex>& f) {
  auto pred = nb.predecessors();
  double worst = 0;
  for (int i = 0; i < nb.size(); ++i) {
    if (nb.succ[i].empty() || pred[i].empty()) continue;
    Complex out = 0, in = 0;
    for (int j : nb.succ[i]) out += f[j];
    for (int j : pred[i]) in += f[j];
    out /= static_cast<double>(nb.succ[i].size());
    in /= static_cast<double>(pred[i].size());
    worst = std::max(worst, std::abs(out - in));
  }
  return worst;
}

}  // namespace

EigenfunctionReport classify_symmetry(const NBLaplacian& L, Complex lambda,
                                      const std::vector<Complex>& f, double tol) {
  EigenfunctionReport r;
  r.lambda = lambda;
  r.lambda_imag_abs = std::abs(lambda.imag());
  double scale = inf_norm(f);
  if (scale == 0) throw domain_error("zero eigenvector");

  double sym_dev = 0, anti_dev = 0;
  for (int i = 0; i < L.nb.size(); ++i) {
    Complex pf = f[L.nb.rev(i)];
    sym_dev = std::max(sym_dev, std::abs(pf - f[i]));
    anti_dev = std::max(anti_dev, std::abs(pf + f[i]));
  }
  if (sym_dev <= tol * scale)
    r.symmetry = SymmetryClass::symmetric;
  else if (anti_dev <= tol * scale)
    r.symmetry = SymmetryClass::antisymmetric;
  else
    r.symmetry = SymmetryClass::neither;

  for (const auto& x : f) r.sum_over_edges += x;
  r.p_selfproduct = p_product(L.nb, f, f);

  if (r.symmetry != SymmetryClass::neither) {
    std::vector<Complex> scaled(f);
    for (auto& x : scaled) x /= scale;
    r.flow_balance_residual = flow_balance_residual(L.nb, scaled);
  }
  return r;
}

std::vector<EigenspaceSymmetry> eigenspace_symmetry_analysis(const NBLaplacian& L,
                                                             double cluster_radius) {
  auto es = eigensystem(L.lap);
  int n = L.nb.size();

  // Single-linkage clustering of eigenvalue indices.
  std::vector<std::vector<int>> clusters;
  std::vector<char> taken(n, 0);
  for (int i = 0; i < n; ++i) {
    if (taken[i]) continue;
    std::vector<int> members{i};
    taken[i] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int j = 0; j < n; ++j) {
        if (taken[j]) continue;
        for (int m : members)
          if (std::abs(es.values[j] - es.values[m]) <= cluster_radius) {
            members.push_back(j);
            taken[j] = 1;
            grew = true;
            break;
          }
      }
    }
    clusters.push_back(std::move(members));
  }

  std::vector<EigenspaceSymmetry> out;
  for (const auto& members : clusters) {
    int mult = static_cast<int>(members.size());
    Eigen::MatrixXcd v(n, mult);
    Complex mean = 0;
    for (int c = 0; c < mult; ++c) {
      v.col(c) = es.vectors.col(members[c]);
      mean += es.values[members[c]];
    }
    mean /= static_cast<double>(mult);

    Eigen::MatrixXcd pv(n, mult);
    for (int i = 0; i < n; ++i) pv.row(L.nb.rev(i)) = v.row(i);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd_minus(pv - v);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd_plus(pv + v);
    double thresh = 1e-6 * std::sqrt(static_cast<double>(n));
    int rank_minus = 0, rank_plus = 0;
    for (int i = 0; i < svd_minus.singularValues().size(); ++i)
      if (svd_minus.singularValues()(i) > thresh) ++rank_minus;
    for (int i = 0; i < svd_plus.singularValues().size(); ++i)
      if (svd_plus.singularValues()(i) > thresh) ++rank_plus;

    EigenspaceSymmetry e;
    e.lambda = mean;
    e.multiplicity = mult;
    // (P - Id) annihilates exactly the symmetric directions of the span.
    e.symmetric_dim = mult - rank_minus;
    e.antisymmetric_dim = mult - rank_plus;
    out.push_back(e);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.lambda.real() != y.lambda.real()) return x.lambda.real() < y.lambda.real();
    return x.lambda.imag() < y.lambda.imag();
  });
  return out;
}

LPEquivalenceReport symmetric_LP_equivalence(const SimpleGraph& g, double tol) {
  auto L = build_laplacian(g);
  int n = L.nb.size();
  LPEquivalenceReport r;

  RationalMatrix lp = L.lap * reversal_matrix(L.nb);
  r.lp_symmetric_exact = lp.is_symmetric();

  // Random-walk Laplacian of the line graph (vertex i of LG = base edge i).
  auto lg = line_graph(g);
  RationalMatrix llg = RationalMatrix::identity(lg.n);
  {
    auto deg = lg.degrees();
    for (auto [u, v] : lg.edges) {
      llg.at(u, v) -= Rat(1, deg[u]);
      llg.at(v, u) -= Rat(1, deg[v]);
    }
  }
  auto lg_spectrum = eigenvalues(llg);

  auto lp_d = lp.to_double_rowmajor();
  auto llg_d = llg.to_double_rowmajor();
  auto es = eigensystem(L.lap);
  for (int c = 0; c < n; ++c) {
    std::vector<Complex> f(n);
    for (int i = 0; i < n; ++i) f[i] = es.vectors(i, c);
    auto rep = classify_symmetry(L, es.values[c], f, tol);
    if (rep.symmetry != SymmetryClass::symmetric) continue;
    ++r.symmetric_pairs;
    Complex lambda = es.values[c];
    double scale = inf_norm(f);

    for (int i = 0; i < n; ++i) {
      Complex acc = 0;
      for (int j = 0; j < n; ++j) acc += lp_d[static_cast<std::size_t>(i) * n + j] * f[j];
      r.max_lp_residual = std::max(r.max_lp_residual, std::abs(acc - lambda * f[i]) / scale);
    }

    std::vector<Complex> ftilde(L.nb.M);
    for (int e = 0; e < L.nb.M; ++e) ftilde[e] = (f[e] + f[e + L.nb.M]) / 2.0;
    double fscale = inf_norm(ftilde);
    if (fscale > 0) {
      for (int i = 0; i < lg.n; ++i) {
        Complex acc = 0;
        for (int j = 0; j < lg.n; ++j)
          acc += llg_d[static_cast<std::size_t>(i) * lg.n + j] * ftilde[j];
        r.max_line_graph_residual =
            std::max(r.max_line_graph_residual, std::abs(acc - lambda * ftilde[i]) / fscale);
      }
    }
    double gap = 1e300;
    for (const auto& mu : lg_spectrum.values) gap = std::min(gap, std::abs(mu - lambda));
    r.max_line_graph_spectrum_gap = std::max(r.max_line_graph_spectrum_gap, gap);
  }
  return r;
}

namespace {

void nk_paths(const NBGraph& nb, int v, int depth, double weight, const std::vector<Complex>& f,
              Complex& acc) {
  if (depth == 0) {
    acc += weight * f[v];
    return;
  }
  double w = weight / static_cast<double>(nb.out_weight[v]);
  for (int j : nb.succ[v]) nk_paths(nb, j, depth - 1, w, f, acc);
}

}  // namespace

double nk_determination_residual(const NBLaplacian& L, Complex lambda,
                                 const std::vector<Complex>& f, int k) {
  if (k < 1) throw domain_error("neighborhood depth must be >= 1");
  if (std::abs(lambda - Complex(1.0, 0.0)) < 1e-12)
    throw domain_error("reconstruction needs lambda != 1");
  double scale = inf_norm(f);
  Complex factor = std::pow(Complex(1.0, 0.0) - lambda, -k);
  double worst = 0;
  for (int v = 0; v < L.nb.size(); ++v) {
    Complex acc = 0;
    nk_paths(L.nb, v, k, 1.0, f, acc);
    worst = std::max(worst, std::abs(factor * acc - f[v]) / scale);
  }
  return worst;
}

POrthogonalityReport p_orthogonality(const NBLaplacian& L, double tol) {
  auto es = eigensystem(L.lap);
  int n = L.nb.size();
  POrthogonalityReport r;
  std::vector<std::vector<Complex>> fs(n, std::vector<Complex>(n));
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < n; ++i) fs[c][i] = es.vectors(i, c);

  const double cluster = 1e-6;
  for (int i = 0; i < n; ++i) {
    if (std::abs(es.values[i].imag()) > 1e-8)
      r.max_nonreal_selfproduct =
          std::max(r.max_nonreal_selfproduct, std::abs(p_product(L.nb, fs[i], fs[i])));
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(es.values[i] - es.values[j]) <= cluster) {
        ++r.degenerate_skipped;
        continue;
      }
      if (std::abs(std::conj(es.values[i]) - es.values[j]) <= cluster) continue;
      ++r.pairs_checked;
      r.max_cross_product =
          std::max(r.max_cross_product, std::abs(p_product(L.nb, fs[i], fs[j])));
    }
  }
  (void)tol;
  return r;
}

EnvelopeReport modulus_envelope(const SimpleGraph& g, double a, double tol) {
  auto L = build_laplacian(g);
  if (L.nb.weak_component_count() != 1)
    throw domain_error("the envelope theorem needs a connected NB graph");
  EnvelopeReport r;
  r.a = a;

  // mpq_class(double) is exact on binary fractions, so a = 0, 1, 0.5, ...
  // shift the Laplacian without rounding.
  Rat a_exact(a);
  RationalMatrix shifted = RationalMatrix::identity(L.nb.size()).scaled(a_exact) - L.lap;

  auto s = singular_values_ascending(shifted);
  r.s1 = s.size() > 0 ? s[0] : 0;
  r.s2 = s.size() > 1 ? s[1] : r.s1;
  r.s_top = s.empty() ? 0 : s.back();

  auto spec = eigenvalues(L.lap);
  r.min_dist = 1e300;
  r.max_dist = 0;
  for (const auto& lambda : spec.values) {
    if (std::abs(lambda) <= 1e-8) {
      ++r.excluded_zero_count;
      continue;
    }
    double d = std::abs(lambda - Complex(a, 0.0));
    r.min_dist = std::min(r.min_dist, d);
    r.max_dist = std::max(r.max_dist, d);
  }
  r.lower_s2_holds = r.min_dist >= r.s2 - tol;
  r.lower_s1_holds = r.min_dist >= r.s1 - tol;
  r.upper_holds = r.max_dist <= r.s_top + tol;
  return r;
}

}  // namespace nbspectra
