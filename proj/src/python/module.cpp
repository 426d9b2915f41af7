// Python bindings for the non-backtracking spectra library.
//
// The module exposes the main operations with Python-native types:
// graphs travel as graph6 strings or edge lists, exact rationals as
// "p/q" strings, spectra as lists of complex numbers.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "nbspectra/bounds.hpp"
#include "nbspectra/canonical.hpp"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/cospectral.hpp"
#include "nbspectra/counting.hpp"
#include "nbspectra/errors.hpp"
#include "nbspectra/graph.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/nb.hpp"
#include "nbspectra/partite.hpp"
#include "nbspectra/rational.hpp"
#include "nbspectra/spectrum.hpp"
#include "nbspectra/verify.hpp"

namespace py = pybind11;
using namespace nbspectra;

namespace {

SimpleGraph graph_from_arg(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) {
    std::string s = obj.cast<std::string>();
    // Accept either a generator spec ("petal:2,3") or a graph6 string.
    if (s.find(':') != std::string::npos) return parse_generator_spec(s);
    return parse_graph6(s);
  }
  // Otherwise an iterable of (u, v) pairs plus optional vertex count is
  // handled by the dedicated from_edges() entry point.
  throw domain_error("expected a graph6 string or generator spec");
}

py::list spectrum_to_list(const std::vector<Complex>& eigs) {
  py::list out;
  for (const Complex& z : sorted_by_re_im(eigs)) out.append(z);
  return out;
}

py::dict gap_to_dict(const GapReport& r) {
  py::dict d;
  d["epsilon"] = r.epsilon;
  d["E"] = r.big_e;
  d["max_k"] = r.max_k;
  d["lower_bound"] = r.lower_bound;
  d["upper_bound"] = r.upper_bound_thm;
  d["corollary_bound"] = r.corollary_bound;
  d["conjecture_bound"] = r.conjecture_bound;
  d["lower_holds"] = r.lower_holds;
  d["upper_chain_holds"] = r.upper_chain_holds;
  d["E_is_one"] = r.big_e_is_one;
  d["corollary_holds"] = r.corollary_holds;
  d["conjecture_holds"] = r.conjecture_holds;
  d["excluded_cycle"] = r.excluded_cycle;
  d["note"] = r.note;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Non-backtracking graphs, non-backtracking Laplacians and their "
      "spectra: exact and numeric computations plus structural checks.";

  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<capability_error>(m, "CapabilityError",
                                           PyExc_RuntimeError);
  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

  m.def(
      "from_edges",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        return to_graph6(SimpleGraph::from_edges(n, edges));
      },
      py::arg("n"), py::arg("edges"),
      "Build a graph on n vertices from an edge list; returns graph6.");

  m.def(
      "generate",
      [](const std::string& spec) { return to_graph6(parse_generator_spec(spec)); },
      py::arg("spec"),
      "Expand a generator spec like 'petal:2,3', 'complete:4', 'cycle:6', "
      "'wheel:11' to graph6.");

  m.def(
      "degrees",
      [](const py::object& g) { return graph_from_arg(g).degrees(); },
      py::arg("graph"), "Vertex degrees.");

  m.def(
      "nb_info",
      [](const py::object& g) {
        NBGraph nb = build_nb(graph_from_arg(g));
        py::dict d;
        d["vertices"] = nb.size();
        std::size_t arcs = 0;
        for (const auto& s : nb.succ) arcs += s.size();
        d["arcs"] = arcs;
        py::list inputs, outputs, reversals;
        for (int i = 0; i < nb.size(); ++i) {
          inputs.append(nb.verts[i].first);
          outputs.append(nb.verts[i].second);
          reversals.append(nb.rev(i));
        }
        d["inputs"] = inputs;
        d["outputs"] = outputs;
        d["reversals"] = reversals;
        py::list succ;
        for (const auto& s : nb.succ) succ.append(s);
        d["successors"] = succ;
        return d;
      },
      py::arg("graph"),
      "Non-backtracking graph: oriented edges, reversal pairing, successor "
      "lists. Vertex i is the i-th oriented edge; the first M entries are "
      "the u<v orientations in lexicographic order, entry i+M reverses i.");

  m.def(
      "nb_eigenvalues",
      [](const py::object& g, const std::string& op) {
        SimpleGraph graph = graph_from_arg(g);
        RationalMatrix m_ = operator_matrix(graph, parse_operator(op));
        return spectrum_to_list(eigenvalues(m_).values);
      },
      py::arg("graph"), py::arg("operator") = "nb-laplacian",
      "Numeric spectrum of one of: adjacency, normalized-laplacian, "
      "nb-matrix, nb-laplacian.");

  m.def(
      "char_poly_key",
      [](const py::object& g, const std::string& op) {
        SimpleGraph graph = graph_from_arg(g);
        return spectral_key(graph, parse_operator(op));
      },
      py::arg("graph"), py::arg("operator") = "nb-laplacian",
      "Canonical exact characteristic-polynomial key; equal keys mean "
      "exactly equal spectra.");

  m.def(
      "char_poly",
      [](const py::object& g, const std::string& op) {
        SimpleGraph graph = graph_from_arg(g);
        CharPoly cp = char_poly(operator_matrix(graph, parse_operator(op)));
        std::vector<std::string> coeffs;
        for (const auto& c : cp.c) coeffs.push_back(rat_to_string(c));
        return coeffs;
      },
      py::arg("graph"), py::arg("operator") = "nb-laplacian",
      "Exact characteristic polynomial coefficients, ascending degree, as "
      "'p/q' strings; the polynomial is monic.");

  m.def(
      "partite",
      [](const py::object& g) {
        PartiteReport r = circular_partite_analysis(graph_from_arg(g));
        py::dict d;
        d["feasible_k"] = r.feasible_k;
        d["max_k"] = r.max_k;
        d["witness_labels"] = r.witness.label;
        return d;
      },
      py::arg("graph"),
      "Circular k-partiteness: feasible k values, the maximum, and a "
      "witness labeling of oriented edges for the maximum.");

  m.def(
      "gap",
      [](const py::object& g, double tol) {
        return gap_to_dict(gap_report(graph_from_arg(g), tol));
      },
      py::arg("graph"), py::arg("tol") = 1e-8,
      "Spectral gap report: epsilon, E, and the lower/upper bounds.");

  m.def(
      "independence",
      [](const py::object& g) {
        IndependenceReport r = independence_numbers(graph_from_arg(g));
        py::dict d;
        d["alpha_out"] = r.alpha_out;
        d["alpha_s_out"] = r.alpha_s_out;
        return d;
      },
      py::arg("graph"),
      "Exact out-independence and strong-out-independence numbers of the "
      "non-backtracking graph.");

  m.def(
      "petal_eigenvalues",
      [](int p, int k) { return spectrum_to_list(petal_spectrum(p, k)); },
      py::arg("p"), py::arg("k"),
      "Closed-form non-backtracking Laplacian spectrum of the petal graph "
      "(p petals of length k).");

  m.def(
      "nb_fraction",
      [](int n) { return rat_to_string(nb_fraction(n)); },
      py::arg("n"),
      "Fraction of labelled digraphs on n nodes that arise as "
      "non-backtracking graphs, as an exact rational string.");

  m.def(
      "are_isomorphic",
      [](const py::object& a, const py::object& b) {
        return are_isomorphic(graph_from_arg(a), graph_from_arg(b));
      },
      py::arg("a"), py::arg("b"), "Exact graph isomorphism test.");

  m.def(
      "verify",
      [](const py::object& g, double tol) {
        VerifyReport rep = verify_graph(graph_from_arg(g), tol);
        py::list checks;
        for (const CheckResult& c : rep.checks) {
          py::dict d;
          d["name"] = c.name;
          d["status"] = check_status_name(c.status);
          d["detail"] = c.detail;
          checks.append(d);
        }
        py::dict d;
        d["ok"] = rep.ok();
        d["passed"] = rep.passed;
        d["failed"] = rep.failed;
        d["skipped"] = rep.skipped;
        d["checks"] = checks;
        return d;
      },
      py::arg("graph"), py::arg("tol") = 1e-8,
      "Run the full named structural/spectral check suite on one graph.");

  m.def(
      "scan_csv",
      [](int n_max, int threads) {
        ScanResult r = cospectral_scan(n_max, 2, false, threads);
        return scan_csv(r);
      },
      py::arg("n_max"), py::arg("threads") = 1,
      "Cospectrality scan over min-degree-2 graphs up to n_max (<= 7 "
      "here); returns the CSV table of collision counts.");
}
