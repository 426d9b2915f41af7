#include "nbspectra/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "nbspectra/bounds.hpp"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/errors.hpp"
#include "nbspectra/format.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/nb.hpp"
#include "nbspectra/partite.hpp"
#include "nbspectra/rational.hpp"
#include "nbspectra/spectrum.hpp"

namespace nbspectra {

namespace {

using Status = CheckResult::Status;

// Fixed eigenfunction thresholds (independent of --tol, which governs the
// generic numeric-residual checks): eigenvalues within kZeroEig of 0 count as
// the zero eigenvalue; classification of Pf = +-f happens at kClassify
// relative; classified eigenvalues must be real to kImagTol and flow-balanced
// to kFlowTol; eigenfunction sums and P-products are bounded by kSumTol.
constexpr double kZeroEig = 1e-6;
constexpr double kClassify = 1e-6;
constexpr double kImagTol = 1e-8;
constexpr double kFlowTol = 1e-6;
constexpr double kSumTol = 1e-6;

}  // namespace

std::string check_status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
    case Status::info: return "INFO";
  }
  return "?";
}

VerifyReport verify_graph(const SimpleGraph& g, double tol) {
  if (g.edges.empty()) {
    throw domain_error("verification requires a graph with at least one edge");
  }
  VerifyReport rep;
  auto add = [&rep](const std::string& name, Status st, const std::string& detail) {
    rep.checks.push_back({name, st, detail});
    switch (st) {
      case Status::pass: ++rep.passed; break;
      case Status::fail: ++rep.failed; break;
      case Status::skip: ++rep.skipped; break;
      case Status::info: ++rep.infos; break;
    }
  };
  auto verdict = [&add](const std::string& name, bool ok, const std::string& detail) {
    add(name, ok ? Status::pass : Status::fail, detail);
  };

  const NBGraph nb = build_nb(g);
  const std::vector<int> deg = g.degrees();
  const int twoM = nb.size();
  const bool md2 = g.min_degree() >= 2;
  const std::string md2_reason = "needs minimum degree >= 2";

  // --- structural ------------------------------------------------------------

  {
    long long expect = 0;
    for (int d : deg) expect += static_cast<long long>(d) * d;
    expect -= twoM;
    verdict("nb-size",
            twoM == 2 * g.edge_count() && nb.arc_count == expect,
            "vertices=" + std::to_string(twoM) + " arcs=" + std::to_string(nb.arc_count) +
                " expected_arcs=" + std::to_string(expect));
  }

  {
    const ReconstructionReport r = reconstruct_stats(nb);
    bool degrees_match = r.consistent && r.m == g.edge_count();
    for (const auto& [d, count] : r.degree_counts) {
      long long actual = 0;
      for (int dd : deg) {
        if (dd == d) ++actual;
      }
      if (count != actual) degrees_match = false;
    }
    verdict("nb-reconstruction", degrees_match,
            "edge count and per-degree vertex counts recovered from NB out-degrees");
  }

  if (md2 && g.is_connected()) {
    const ConnectivityReport r = connectivity_class(g);
    verdict("connectivity-equivalence", r.equivalence_holds,
            "cycle_space_dim=" + std::to_string(r.cycle_space_dim) +
                " weak=" + std::to_string(r.weak_components) +
                " strong=" + std::to_string(r.strong_components));
  } else {
    add("connectivity-equivalence", Status::skip,
        md2 ? "stated for connected graphs" : md2_reason);
  }

  {
    const BipartiteNBReport r = bipartite_nb_partition_check(g);
    verdict("bipartite-two-partite",
            r.equivalent && (!r.base_bipartite || r.orientation_classes_alternate),
            std::string("bipartite=") + (r.base_bipartite ? "yes" : "no") +
                " two_partite=" + (r.nb_two_partite ? "yes" : "no"));
  }

  {
    const PartiteReport pr = circular_partite_analysis(g);
    std::string feas;
    for (int k : pr.feasible_k) {
      if (!feas.empty()) feas += ' ';
      feas += std::to_string(k);
    }
    if (twoM <= 16) {
      bool agree = true;
      int bad_k = 0;
      for (int k = 1; k <= twoM && agree; ++k) {
        const bool fast =
            std::find(pr.feasible_k.begin(), pr.feasible_k.end(), k) != pr.feasible_k.end();
        if (brute_force_partite(g, k) != fast) {
          agree = false;
          bad_k = k;
        }
      }
      verdict("partite-divisors", agree,
              agree ? "feasible k: " + feas + " (brute-force agreement for all k <= " +
                          std::to_string(twoM) + ")"
                    : "fast analysis disagrees with brute force at k=" + std::to_string(bad_k));
    } else {
      add("partite-divisors", Status::pass,
          "feasible k: " + feas + " (witness validated; brute-force cross-check capped at 16 "
          "oriented edges)");
    }

    if (md2) {
      bool ok = true;
      double worst = 0.0;
      for (int k : pr.feasible_k) {
        const RootsOfUnityReport rr = roots_of_unity_eigenvalues(g, k);
        ok = ok && rr.charpoly_divisible;
        worst = std::max(worst, rr.max_eigen_residual);
      }
      ok = ok && worst <= tol;
      verdict("roots-of-unity", ok,
              "x^k-1 divides the walk polynomial for every feasible k; worst eigen residual " +
                  format_double(worst));
    } else {
      add("roots-of-unity", Status::skip, md2_reason);
    }
  }

  if (!md2) {
    for (const char* name :
         {"row-sums-one", "transpose-identity", "charpoly-cross-method", "zero-multiplicity",
          "one-not-eigenvalue", "two-iff-bipartite", "regular-transfer", "eigen-residuals",
          "sum-zero", "symmetry-classification", "eigenspace-symmetry", "lp-equivalence",
          "p-orthogonality", "nk-determination", "envelope", "inertia-bounds", "gap-bounds",
          "gap-conjecture", "cycle-signatures", "independence-structure"}) {
      add(name, Status::skip, md2_reason);
    }
    return rep;
  }

  // --- exact identities of the NB Laplacian ----------------------------------

  const NBLaplacian L = build_laplacian(g);
  const CharPoly cp = char_poly(L.lap);

  {
    bool ok = true;
    for (int i = 0; i < twoM && ok; ++i) {
      Rat s(0);
      for (int j = 0; j < twoM; ++j) s += L.walk.at(i, j);
      ok = (s == 1);
    }
    verdict("row-sums-one", ok, "every row of the walk matrix sums to 1 exactly");
  }

  {
    const RationalMatrix P = reversal_matrix(L.nb);
    verdict("transpose-identity", L.lap.transpose() == P * L.lap * P,
            "L^T = P L P over the rationals");
  }

  if (twoM <= 16) {
    verdict("charpoly-cross-method", cp == char_poly_faddeev_leverrier(L.lap),
            "interpolated determinant polynomial equals the trace-recursion polynomial");
  } else {
    add("charpoly-cross-method", Status::skip, "cross-method comparison capped at 16 oriented edges");
  }

  {
    const ZeroMultiplicityReport r = zero_multiplicity_check(g);
    const bool ok =
        r.matches_nb_components && (r.base_has_cycle_component || r.matches_base_components);
    std::string detail = "multiplicity=" + std::to_string(r.charpoly_multiplicity) +
                         " nb_components=" + std::to_string(r.nb_weak_components);
    if (r.base_has_cycle_component) {
      detail += " (cycle component: base-component comparison not applicable)";
    } else {
      detail += " base_components=" + std::to_string(r.base_components);
    }
    verdict("zero-multiplicity", ok, detail);
  }

  verdict("one-not-eigenvalue", !cp.is_root(Rat(1)), "the characteristic polynomial at 1 is nonzero");

  verdict("two-iff-bipartite", cp.is_root(Rat(2)) == g.is_bipartite(),
          std::string("bipartite=") + (g.is_bipartite() ? "yes" : "no") +
              ", 2 is an eigenvalue: " + (cp.is_root(Rat(2)) ? "yes" : "no"));

  {
    const int d = g.min_degree();
    if (d == g.max_degree()) {
      const RationalMatrix scaled_arcs = nb_arc_matrix(L.nb).scaled(Rat(1, d - 1));
      verdict("regular-transfer", L.walk == scaled_arcs,
              "for a " + std::to_string(d) + "-regular graph the walk matrix is the arc matrix"
              " divided by " + std::to_string(d - 1) + ", exactly");
    } else {
      add("regular-transfer", Status::skip, "stated for regular graphs");
    }
  }

  // --- numeric eigenstructure --------------------------------------------------

  const EigenSystem es = eigensystem(L.lap);
  const std::vector<double> lap_d = L.lap.to_double_rowmajor();
  Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      lap_map(lap_d.data(), twoM, twoM);

  {
    double worst = 0.0;
    for (int k = 0; k < twoM; ++k) {
      const Eigen::VectorXcd v = es.vectors.col(k);
      worst = std::max(worst,
                       (lap_map * v - es.values[static_cast<std::size_t>(k)] * v)
                           .cwiseAbs()
                           .maxCoeff());
    }
    verdict("eigen-residuals", worst <= tol,
            "worst ||L f - lambda f||_inf = " + format_double(worst));
  }

  {
    double worst = 0.0;
    for (int k = 0; k < twoM; ++k) {
      if (std::abs(es.values[static_cast<std::size_t>(k)]) <= kZeroEig) continue;
      std::vector<Complex> f(static_cast<std::size_t>(twoM));
      for (int i = 0; i < twoM; ++i) f[static_cast<std::size_t>(i)] = es.vectors(i, k);
      worst = std::max(worst, eigenpair_sum_residual(f));
    }
    verdict("sum-zero", worst <= kSumTol,
            "worst |sum f| / ||f||_1 over eigenpairs with lambda != 0: " + format_double(worst));
  }

  {
    int symmetric = 0, antisymmetric = 0;
    double worst_imag = 0.0, worst_flow = 0.0;
    bool ok = true;
    for (int k = 0; k < twoM; ++k) {
      std::vector<Complex> f(static_cast<std::size_t>(twoM));
      for (int i = 0; i < twoM; ++i) f[static_cast<std::size_t>(i)] = es.vectors(i, k);
      const EigenfunctionReport r =
          classify_symmetry(L, es.values[static_cast<std::size_t>(k)], f, kClassify);
      if (r.symmetry == SymmetryClass::neither) continue;
      (r.symmetry == SymmetryClass::symmetric ? symmetric : antisymmetric)++;
      worst_imag = std::max(worst_imag, r.lambda_imag_abs);
      worst_flow = std::max(worst_flow, r.flow_balance_residual);
      ok = ok && r.lambda_imag_abs <= kImagTol && r.flow_balance_residual <= kFlowTol;
    }
    verdict("symmetry-classification", ok,
            std::to_string(symmetric) + " symmetric / " + std::to_string(antisymmetric) +
                " antisymmetric eigenpairs; worst |Im lambda| = " + format_double(worst_imag) +
                ", worst flow-balance residual = " + format_double(worst_flow));
  }

  {
    std::string table;
    for (const EigenspaceSymmetry& c : eigenspace_symmetry_analysis(L, kClassify)) {
      if (!table.empty()) table += "; ";
      table += format_complex(c.lambda, 6) + ": mult " + std::to_string(c.multiplicity) +
               " = " + std::to_string(c.symmetric_dim) + " sym + " +
               std::to_string(c.antisymmetric_dim) + " antisym + " +
               std::to_string(c.multiplicity - c.symmetric_dim - c.antisymmetric_dim) + " mixed";
    }
    add("eigenspace-symmetry", Status::info, table);
  }

  {
    const LPEquivalenceReport r = symmetric_LP_equivalence(g, kClassify);
    const bool ok = r.lp_symmetric_exact && r.max_lp_residual <= tol &&
                    r.max_line_graph_residual <= tol && r.max_line_graph_spectrum_gap <= tol;
    verdict("lp-equivalence", ok,
            "L P exactly symmetric; " + std::to_string(r.symmetric_pairs) +
                " symmetric eigenpairs transfer to the line-graph walk Laplacian (worst "
                "residuals " +
                format_double(r.max_lp_residual) + ", " +
                format_double(r.max_line_graph_residual) + ", spectrum gap " +
                format_double(r.max_line_graph_spectrum_gap) + ")");
  }

  {
    const POrthogonalityReport r = p_orthogonality(L, kClassify);
    const bool ok = r.max_cross_product <= kSumTol && r.max_nonreal_selfproduct <= kSumTol;
    verdict("p-orthogonality", ok,
            std::to_string(r.pairs_checked) + " pairs; worst |(f,g)_P| = " +
                format_double(r.max_cross_product) + ", worst non-real |(f,f)_P| = " +
                format_double(r.max_nonreal_selfproduct) + ", " +
                std::to_string(r.degenerate_skipped) + " same-cluster pairs skipped");
  }

  {
    double worst = 0.0;
    for (int k = 0; k < twoM; ++k) {
      const Complex lambda = es.values[static_cast<std::size_t>(k)];
      if (std::abs(1.0 - lambda) <= kZeroEig) continue;
      std::vector<Complex> f(static_cast<std::size_t>(twoM));
      for (int i = 0; i < twoM; ++i) f[static_cast<std::size_t>(i)] = es.vectors(i, k);
      for (int steps = 1; steps <= 3; ++steps) {
        worst = std::max(worst, nk_determination_residual(L, lambda, f, steps));
      }
    }
    verdict("nk-determination", worst <= tol,
            "k-step reconstruction of f(e) for k = 1..3; worst residual " + format_double(worst));
  }

  if (L.nb.weak_component_count() == 1) {
    bool ok = true;
    std::string detail;
    for (double a : {1.0, 0.0}) {
      const EnvelopeReport r = modulus_envelope(g, a, tol);
      ok = ok && r.lower_s2_holds && r.lower_s1_holds && r.upper_holds;
      if (!detail.empty()) detail += "; ";
      detail += "a=" + format_double(a) + ": s2=" + format_double(r.s2) +
                " <= min|lambda-a|=" + format_double(r.min_dist) +
                ", max=" + format_double(r.max_dist) + " <= s_top=" + format_double(r.s_top);
    }
    verdict("envelope", ok, detail);
  } else {
    add("envelope", Status::skip, "NB graph is not weakly connected (cycle component or "
        "disconnected base)");
  }

  if (twoM <= 28) {
    bool ok = true;
    int alpha_out = 0, alpha_s_out = 0;
    bool gram = true, remark = true;
    for (double a : {1.0, 0.0}) {
      const InertiaReport r = inertia_bounds_check(g, a, tol);
      ok = ok && r.all_hold;
      gram = gram && r.gram_entries_exact;
      remark = remark && r.smallest_two_match_remark;
      alpha_out = r.alpha_out;
      alpha_s_out = r.alpha_s_out;
    }
    verdict("inertia-bounds", ok && gram && remark,
            "alpha_out=" + std::to_string(alpha_out) + " alpha_s_out=" +
                std::to_string(alpha_s_out) +
                "; six singular-value counting bounds at a in {0,1}; Gram entries exact: " +
                (gram ? "yes" : "no") + "; two smallest walk singular values equal 1/(max "
                "degree - 1): " + (remark ? "yes" : "no"));
  } else {
    add("inertia-bounds", Status::skip, "independence numbers capped at 14 edges");
  }

  if (twoM <= 28) {
    const IndependenceReport r = independence_numbers(g);
    verdict("independence-structure",
            r.alpha_out == r.base_vertices_with_edges && r.alpha_s_out <= r.alpha_out,
            "alpha_out=" + std::to_string(r.alpha_out) + " equals the number of base vertices; "
            "alpha_s_out=" + std::to_string(r.alpha_s_out));
  } else {
    add("independence-structure", Status::skip, "independence numbers capped at 14 edges");
  }

  if (!g.has_cycle_component()) {
    const GapReport r = gap_report(g, tol);
    const bool ok = r.lower_holds && r.upper_chain_holds && r.corollary_holds &&
                    (r.max_k <= 1 || r.big_e_is_one);
    verdict("gap-bounds", ok,
            "epsilon=" + format_double(r.epsilon) + " E=" + format_double(r.big_e) +
                " lower=" + format_double(r.lower_bound) + " upper=" +
                format_double(r.upper_bound_thm) + " corollary=" +
                format_double(r.corollary_bound) + " max_k=" + std::to_string(r.max_k));
    add("gap-conjecture", Status::info,
        r.conjecture_holds
            ? "epsilon <= 1/(min degree - 1) observed (" + format_double(r.epsilon) + " <= " +
                  format_double(r.conjecture_bound) + ")"
            : "VIOLATED: epsilon = " + format_double(r.epsilon) + " > " +
                  format_double(r.conjecture_bound) + " (informational only)");
  } else {
    add("gap-bounds", Status::skip,
        "a connected component is a cycle graph; gap statements not asserted");
    add("gap-conjecture", Status::skip, "cycle-graph component");
  }

  if (twoM <= 24) {
    const CycleSignatureReport r = cycle_signature_check(g, std::max(tol, 1e-8));
    int constant = 0, big = 0, degenerate = 0;
    for (const CycleSignature& c : r.cycles) {
      if (c.kind == CycleSignature::Kind::constant_degree) ++constant;
      if (c.kind == CycleSignature::Kind::one_big_vertex) ++big;
      if (c.kind == CycleSignature::Kind::degenerate_component) ++degenerate;
    }
    std::string detail = std::to_string(r.cycles.size()) + " chordless cycles (" +
                         std::to_string(constant) + " constant-degree, " + std::to_string(big) +
                         " one-big-vertex";
    if (degenerate > 0) {
      detail += ", " + std::to_string(degenerate) + " full cycle components excluded";
    }
    detail += "); every predicted eigenvalue present";
    verdict("cycle-signatures", r.all_hold, detail);
  } else {
    add("cycle-signatures", Status::skip, "cycle enumeration capped at 12 edges");
  }

  return rep;
}

std::string verify_report_json(const SimpleGraph& g, double tol, const VerifyReport& r) {
  std::string out = "{\n  \"graph\": {\"n\": " + std::to_string(g.n) +
                    ", \"edges\": " + std::to_string(g.edge_count()) +
                    ", \"min_degree\": " + std::to_string(g.min_degree()) +
                    ", \"max_degree\": " + std::to_string(g.max_degree()) + ", \"graph6\": \"" +
                    json_escape(to_graph6(g)) + "\"},\n";
  out += "  \"tolerance\": " + format_double(tol) + ",\n  \"checks\": [\n";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckResult& c = r.checks[i];
    out += "    {\"name\": \"" + json_escape(c.name) + "\", \"status\": \"" +
           check_status_name(c.status) + "\", \"detail\": \"" + json_escape(c.detail) + "\"}";
    out += (i + 1 < r.checks.size()) ? ",\n" : "\n";
  }
  out += "  ],\n  \"summary\": {\"pass\": " + std::to_string(r.passed) +
         ", \"fail\": " + std::to_string(r.failed) + ", \"skip\": " + std::to_string(r.skipped) +
         ", \"info\": " + std::to_string(r.infos) +
         ", \"ok\": " + (r.ok() ? "true" : "false") + "}\n}\n";
  return out;
}

}  // namespace nbspectra
