#include "nbspectra/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "nbspectra/charpoly.hpp"
#include "nbspectra/errors.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/nb.hpp"
#include "nbspectra/partite.hpp"
#include "nbspectra/rational.hpp"

namespace nbspectra {

GapReport gap_report(const SimpleGraph& g, double tol) {
  if (g.min_degree() < 2) {
    throw domain_error("gap report requires minimum degree >= 2");
  }
  NBLaplacian L = build_laplacian(g);
  Spectrum spec = eigenvalues(L.lap);

  GapReport r;
  double eps = std::numeric_limits<double>::infinity();
  for (const Complex& v : spec.values) eps = std::min(eps, std::abs(1.0 - v));
  r.epsilon = eps;

  // Drop one instance of the eigenvalue 0 (always present: rows of the
  // Laplacian sum to zero), then take the farthest remaining point from 1.
  std::size_t zero_at = 0;
  for (std::size_t i = 1; i < spec.values.size(); ++i) {
    if (std::abs(spec.values[i]) < std::abs(spec.values[zero_at])) zero_at = i;
  }
  double big = 0.0;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    if (i == zero_at) continue;
    big = std::max(big, std::abs(1.0 - spec.values[i]));
  }
  r.big_e = big;

  r.max_k = circular_partite_analysis(g).max_k;

  const std::vector<int> deg = g.degrees();
  const int delta = g.min_degree();
  const int Delta = g.max_degree();
  const int twoM = 2 * static_cast<int>(g.edges.size());
  r.lower_bound = 1.0 / (Delta - 1);
  double log_prod = 0.0;
  for (int d : deg) log_prod += (d - 1) * std::log(static_cast<double>(d - 1));
  const int root_order = twoM - r.max_k;
  r.upper_bound_thm = root_order > 0 ? std::exp(-log_prod / root_order) : 1.0;
  r.corollary_bound =
      std::pow(static_cast<double>(delta - 1), -static_cast<double>(delta - 1) / Delta);
  r.conjecture_bound = 1.0 / (delta - 1);

  r.lower_holds = r.epsilon >= r.lower_bound - tol;
  r.upper_chain_holds =
      (r.epsilon <= r.upper_bound_thm + tol) && (r.upper_bound_thm <= r.big_e + tol);
  r.big_e_is_one = std::abs(r.big_e - 1.0) <= tol;
  r.corollary_holds = r.epsilon <= r.corollary_bound + tol;
  r.conjecture_holds = r.epsilon <= r.conjecture_bound + tol;

  r.excluded_cycle = g.has_cycle_component();
  if (r.excluded_cycle) {
    r.note =
        "a connected component is a cycle graph: the NB Laplacian has extra "
        "zero eigenvalues and the gap statements are not asserted for this "
        "graph (values reported for information)";
  }
  return r;
}

std::vector<Complex> petal_spectrum(int p, int k) {
  if (p < 2 || k < 3) {
    throw domain_error("petal spectrum requires p >= 2 and k >= 3");
  }
  const double pi = std::numbers::pi;
  const double r = std::pow(2.0 * p - 1.0, -1.0 / k);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(2 * p * k));
  // First family: 1 - w for each k-th root of unity w, once each.
  for (int j = 0; j < k; ++j) {
    out.emplace_back(1.0 - std::polar(1.0, 2.0 * pi * j / k));
  }
  // Second family: 1 - r z over the 2k-th roots of unity z, with multiplicity
  // p when z^k = 1 (even j) and p - 1 when z^k = -1 (odd j).
  for (int j = 0; j < 2 * k; ++j) {
    const Complex v = 1.0 - r * std::polar(1.0, pi * j / k);
    const int mult = (j % 2 == 0) ? p : p - 1;
    for (int t = 0; t < mult; ++t) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

namespace {

// All simple chordless cycles, one representative per cycle: the start is the
// smallest vertex, and the orientation with path[1] < path.back() is kept.
void chordless_cycle_dfs(const SimpleGraph& g, const std::vector<std::vector<int>>& adj,
                         int start, std::vector<int>& path, std::vector<char>& on_path,
                         std::vector<std::vector<int>>& out) {
  const int u = path.back();
  for (int w : adj[u]) {
    if (w == start) {
      if (path.size() >= 3 && path[1] < path.back()) {
        // Vertices were pruned against chords to everything but the start;
        // only start-chords remain to be checked.
        bool chordless = true;
        for (std::size_t i = 2; i + 1 < path.size() && chordless; ++i) {
          if (g.has_edge(start, path[i])) chordless = false;
        }
        if (chordless) out.push_back(path);
      }
      continue;
    }
    if (w < start || on_path[w]) continue;
    // A cycle extending through w stays chordless only if w touches no path
    // vertex other than its predecessor u and (possibly, to close) the start.
    bool chord = false;
    for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) {
      if (g.has_edge(w, path[i])) chord = true;
    }
    if (chord) continue;
    path.push_back(w);
    on_path[w] = 1;
    chordless_cycle_dfs(g, adj, start, path, on_path, out);
    on_path[w] = 0;
    path.pop_back();
  }
}

std::vector<std::vector<int>> chordless_cycles(const SimpleGraph& g) {
  const auto adj = g.adjacency_lists();
  std::vector<std::vector<int>> out;
  std::vector<char> on_path(g.n, 0);
  std::vector<int> path;
  for (int s = 0; s < g.n; ++s) {
    path.assign(1, s);
    on_path.assign(g.n, 0);
    on_path[s] = 1;
    chordless_cycle_dfs(g, adj, s, path, on_path, out);
  }
  return out;
}

}  // namespace

CycleSignatureReport cycle_signature_check(const SimpleGraph& g, double tol) {
  if (g.min_degree() < 2) {
    throw domain_error("cycle signature check requires minimum degree >= 2");
  }
  if (2 * g.edges.size() > 24) {
    throw capability_error("cycle signature check is limited to graphs with at most 12 edges");
  }

  NBLaplacian L = build_laplacian(g);
  CharPoly cp = char_poly(L.lap);
  Spectrum spec = eigenvalues(L.lap);
  const std::vector<int> deg = g.degrees();

  CycleSignatureReport report;
  report.all_hold = true;
  for (const std::vector<int>& cyc : chordless_cycles(g)) {
    CycleSignature sig;
    sig.vertices = cyc;
    sig.length = static_cast<int>(cyc.size());

    int constant_d = deg[cyc[0]];
    bool constant = true;
    int big_count = 0, big_degree = 0, degree_two = 0;
    for (int v : cyc) {
      if (deg[v] != constant_d) constant = false;
      if (deg[v] == 2) {
        ++degree_two;
      } else if (deg[v] > 2) {
        ++big_count;
        big_degree = deg[v];
      }
    }

    if (constant && constant_d == 2) {
      // The cycle is an entire connected component; excluded from the
      // eigenvalue claims (its Laplacian block is the plain cycle Laplacian).
      sig.kind = CycleSignature::Kind::degenerate_component;
      sig.d = 2;
      sig.holds = true;
    } else if (constant) {
      sig.kind = CycleSignature::Kind::constant_degree;
      sig.d = constant_d;
      const Rat step(1, constant_d - 1);
      bool ok = cp.is_root(Rat(1) - step);
      sig.predicted.push_back(1.0 - 1.0 / (constant_d - 1));
      if (sig.length % 2 == 0) {
        ok = ok && cp.is_root(Rat(1) + step);
        sig.predicted.push_back(1.0 + 1.0 / (constant_d - 1));
      }
      sig.exact_checked = true;
      sig.holds = ok;
      report.all_hold = report.all_hold && ok;
    } else if (big_count == 1 && degree_two == sig.length - 1) {
      sig.kind = CycleSignature::Kind::one_big_vertex;
      sig.d = big_degree;
      const double root = std::pow(static_cast<double>(big_degree - 1), -1.0 / sig.length);
      sig.predicted.push_back(1.0 - root);
      if (sig.length % 2 == 0) sig.predicted.push_back(1.0 + root);
      double worst = 0.0;
      for (double target : sig.predicted) {
        double best = std::numeric_limits<double>::infinity();
        for (const Complex& v : spec.values) {
          best = std::min(best, std::abs(v - Complex(target, 0.0)));
        }
        worst = std::max(worst, best);
      }
      sig.residual = worst;
      sig.holds = worst <= tol;
      report.all_hold = report.all_hold && sig.holds;
    } else {
      sig.kind = CycleSignature::Kind::unclassified;
      sig.holds = true;
    }
    report.cycles.push_back(std::move(sig));
  }
  return report;
}

namespace {

// Exact maximum independent set on a conflict graph of at most 28 vertices,
// by branch and bound over bitmasks.
struct MisSolver {
  std::vector<std::uint64_t> conflict;
  int best = 0;

  void run(std::uint64_t candidates, int current) {
    if (current + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = std::max(best, current);
      return;
    }
    int pivot = -1, pivot_conflicts = -1;
    for (std::uint64_t m = candidates; m != 0; m &= m - 1) {
      const int i = std::countr_zero(m);
      const int c = std::popcount(conflict[i] & candidates);
      if (c > pivot_conflicts) {
        pivot_conflicts = c;
        pivot = i;
      }
    }
    if (pivot_conflicts == 0) {
      best = std::max(best, current + std::popcount(candidates));
      return;
    }
    run(candidates & ~(conflict[pivot] | (std::uint64_t{1} << pivot)), current + 1);
    run(candidates & ~(std::uint64_t{1} << pivot), current);
  }
};

}  // namespace

IndependenceReport independence_numbers(const SimpleGraph& g) {
  if (2 * g.edges.size() > 28) {
    throw capability_error("independence numbers are limited to graphs with at most 14 edges");
  }
  NBGraph nb = build_nb(g);
  const int sz = nb.size();

  MisSolver out_solver, strong_solver;
  out_solver.conflict.assign(sz, 0);
  strong_solver.conflict.assign(sz, 0);
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      if (i == j) continue;
      if (nb.verts[i].first == nb.verts[j].first) {
        out_solver.conflict[i] |= std::uint64_t{1} << j;
        strong_solver.conflict[i] |= std::uint64_t{1} << j;
      }
    }
    for (int j : nb.succ[i]) {
      strong_solver.conflict[i] |= std::uint64_t{1} << j;
      strong_solver.conflict[j] |= std::uint64_t{1} << i;
    }
  }

  const std::uint64_t all =
      sz == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << sz) - 1);
  out_solver.run(all, 0);
  strong_solver.run(all, 0);

  IndependenceReport r;
  r.alpha_out = out_solver.best;
  r.alpha_s_out = strong_solver.best;
  for (int d : g.degrees()) {
    if (d > 0) ++r.base_vertices_with_edges;
  }
  return r;
}

InertiaReport inertia_bounds_check(const SimpleGraph& g, double a, double tol) {
  if (g.min_degree() < 2) {
    throw domain_error("inertia bounds require minimum degree >= 2");
  }
  IndependenceReport ind = independence_numbers(g);
  NBLaplacian L = build_laplacian(g);
  const int delta = g.min_degree();
  const int Delta = g.max_degree();

  InertiaReport r;
  r.a = a;
  r.alpha_out = ind.alpha_out;
  r.alpha_s_out = ind.alpha_s_out;

  const std::vector<double> s_lap = singular_values_ascending(L.lap);
  const Rat a_exact(a);
  const RationalMatrix shifted =
      RationalMatrix::identity(L.lap.rows).scaled(a_exact) - L.lap;
  const std::vector<double> s_shift = singular_values_ascending(shifted);
  const std::vector<double> s_walk = singular_values_ascending(L.walk);

  r.thresholds[0] = std::sqrt(static_cast<double>(delta) / (delta - 1));
  r.thresholds[1] = std::sqrt(static_cast<double>(Delta) / (Delta - 1));
  r.thresholds[2] = std::sqrt((a - 1.0) * (a - 1.0) + 1.0 / (delta - 1));
  r.thresholds[3] = std::sqrt((a - 1.0) * (a - 1.0) + 1.0 / (Delta - 1));
  r.thresholds[4] = std::sqrt(1.0 / (delta - 1));
  r.thresholds[5] = std::sqrt(1.0 / (Delta - 1));

  auto count_le = [tol](const std::vector<double>& s, double t) {
    int c = 0;
    for (double v : s) {
      if (v <= t + tol) ++c;
    }
    return c;
  };
  auto count_ge = [tol](const std::vector<double>& s, double t) {
    int c = 0;
    for (double v : s) {
      if (v >= t - tol) ++c;
    }
    return c;
  };

  r.counts[0] = count_le(s_lap, r.thresholds[0]);
  r.counts[1] = count_ge(s_lap, r.thresholds[1]);
  r.counts[2] = count_le(s_shift, r.thresholds[2]);
  r.counts[3] = count_ge(s_shift, r.thresholds[3]);
  r.counts[4] = count_le(s_walk, r.thresholds[4]);
  r.counts[5] = count_ge(s_walk, r.thresholds[5]);

  r.all_hold = true;
  for (int i = 0; i < 6; ++i) {
    const int alpha = i < 4 ? r.alpha_s_out : r.alpha_out;
    r.holds[i] = alpha <= r.counts[i];
    r.all_hold = r.all_hold && r.holds[i];
  }

  // Entrywise rational check of both Gram matrices against their closed
  // forms: for L^T L the diagonal is deg v / (deg v - 1) (v the input), pairs
  // sharing an input give (deg v - 2)/(deg v - 1)^2, arc-adjacent pairs give
  // -1/(deg m - 1) with m the middle vertex, and everything else vanishes.
  // For (Id - L)^T (Id - L) only the shared-input block survives, with
  // diagonal 1/(deg v - 1).
  const std::vector<int> deg = g.degrees();
  const int sz = L.nb.size();
  RationalMatrix lap_expect(sz, sz);
  RationalMatrix walk_expect(sz, sz);
  for (int i = 0; i < sz; ++i) {
    const int vi = L.nb.verts[i].first;
    lap_expect.at(i, i) = Rat(deg[vi]) / Rat(deg[vi] - 1);
    walk_expect.at(i, i) = Rat(1) / Rat(deg[vi] - 1);
    for (int j = 0; j < sz; ++j) {
      if (i == j) continue;
      if (L.nb.verts[j].first == vi) {
        const Rat block = Rat(deg[vi] - 2) / (Rat(deg[vi] - 1) * Rat(deg[vi] - 1));
        lap_expect.at(i, j) = block;
        walk_expect.at(i, j) = block;
      }
    }
    for (int j : L.nb.succ[i]) {
      const int mid = L.nb.verts[i].second;
      lap_expect.at(i, j) = Rat(-1) / Rat(deg[mid] - 1);
      lap_expect.at(j, i) = Rat(-1) / Rat(deg[mid] - 1);
    }
  }
  const RationalMatrix lap_gram = L.lap.transpose() * L.lap;
  const RationalMatrix walk_gram = L.walk.transpose() * L.walk;
  r.gram_entries_exact = (lap_gram == lap_expect) && (walk_gram == walk_expect);

  const double target = 1.0 / (Delta - 1);
  r.smallest_two_match_remark = s_walk.size() >= 2 &&
                                std::abs(s_walk[0] - target) <= tol &&
                                std::abs(s_walk[1] - target) <= tol;
  return r;
}

}  // namespace nbspectra
