#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "nbspectra/bounds.hpp"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/cospectral.hpp"
#include "nbspectra/counting.hpp"
#include "nbspectra/errors.hpp"
#include "nbspectra/format.hpp"
#include "nbspectra/graph.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/nb.hpp"
#include "nbspectra/partite.hpp"
#include "nbspectra/rational.hpp"
#include "nbspectra/spectrum.hpp"
#include "nbspectra/verify.hpp"

namespace {

using namespace nbspectra;

struct CommonOpts {
  std::string in;
  std::string gen;
  std::string out;
  double tol = 1e-8;
};

void add_graph_opts(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--in", o.in, "input graph file (.g6, .json, or edge list)");
  cmd->add_option("--gen", o.gen,
                  "generator spec: cycle:N, complete:N, petal:P,K, wheel:N, path:M, star:K, "
                  "kbipartite:A,B");
  cmd->add_option("--out", o.out, "output file (default: stdout)");
  cmd->add_option("--tol", o.tol, "numeric tolerance, in (0, 1e-2]")
      ->check([](const std::string& s) -> std::string {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0' || !(v > 0.0) || v > 1e-2) {
          return "tolerance must be a number in (0, 1e-2]";
        }
        return {};
      });
}

SimpleGraph input_graph(const CommonOpts& o) {
  if (o.in.empty() == o.gen.empty()) {
    throw domain_error("exactly one of --in and --gen must be given");
  }
  return o.in.empty() ? parse_generator_spec(o.gen) : load_graph_file(o.in);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  f.flush();
  if (!f.good()) throw std::runtime_error("failed writing output file: " + path);
}

int thread_cap() {
  const unsigned hw = std::thread::hardware_concurrency();
  int t = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("NBSPECTRA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      throw domain_error("NBSPECTRA_THREADS must be a positive integer");
    }
    t = std::min<long>(t, v);
  }
  return t;
}

int cmd_build(const CommonOpts& o) {
  const SimpleGraph g = input_graph(o);
  const NBGraph nb = build_nb(g);
  const std::string json = nb_to_json(nb);
  if (o.out.empty()) {
    std::cout << json;
    return 0;
  }
  write_output(o.out, json);
  std::string mtx_path = o.out;
  if (mtx_path.size() >= 5 && mtx_path.substr(mtx_path.size() - 5) == ".json") {
    mtx_path.resize(mtx_path.size() - 5);
  }
  mtx_path += ".mtx";
  write_output(mtx_path, nb_arcs_matrix_market(nb));
  std::cerr << "wrote " << o.out << " and " << mtx_path << "\n";
  return 0;
}

int cmd_spectrum(const CommonOpts& o, const std::string& operator_name_arg, bool exact) {
  const SimpleGraph g = input_graph(o);
  const OperatorTag tag = parse_operator(operator_name_arg);
  const RationalMatrix m = operator_matrix(g, tag);
  const Spectrum spec = eigenvalues(m);

  std::string out = "{\n  \"operator\": \"" + operator_name(tag) + "\",\n";
  out += "  \"dimension\": " + std::to_string(m.rows) + ",\n";
  out += "  \"eigenvalues\": [\n";
  const auto clusters = spec.clustered(1e-6);
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    out += "    {\"re\": " + format_double(clusters[i].first.real()) +
           ", \"im\": " + format_double(clusters[i].first.imag()) +
           ", \"multiplicity\": " + std::to_string(clusters[i].second) + "}";
    out += (i + 1 < clusters.size()) ? ",\n" : "\n";
  }
  out += "  ]";
  if (exact) {
    out += ",\n  \"exact_key\": \"" + json_escape(spectral_key(g, tag)) + "\"";
  }
  out += "\n}\n";
  write_output(o.out, out);
  return 0;
}

int cmd_gap(const CommonOpts& o) {
  const SimpleGraph g = input_graph(o);
  const GapReport r = gap_report(g, o.tol);
  std::string out = "{\n";
  out += "  \"epsilon\": " + format_double(r.epsilon) + ",\n";
  out += "  \"E\": " + format_double(r.big_e) + ",\n";
  out += "  \"max_k\": " + std::to_string(r.max_k) + ",\n";
  out += "  \"lower_bound\": " + format_double(r.lower_bound) + ",\n";
  out += "  \"upper_bound\": " + format_double(r.upper_bound_thm) + ",\n";
  out += "  \"corollary_bound\": " + format_double(r.corollary_bound) + ",\n";
  out += "  \"conjecture_bound\": " + format_double(r.conjecture_bound) + ",\n";
  out += std::string("  \"lower_holds\": ") + (r.lower_holds ? "true" : "false") + ",\n";
  out += std::string("  \"upper_chain_holds\": ") + (r.upper_chain_holds ? "true" : "false") +
         ",\n";
  out += std::string("  \"E_is_one\": ") + (r.big_e_is_one ? "true" : "false") + ",\n";
  out += std::string("  \"corollary_holds\": ") + (r.corollary_holds ? "true" : "false") + ",\n";
  out += std::string("  \"conjecture_holds\": ") + (r.conjecture_holds ? "true" : "false") +
         ",\n";
  out += std::string("  \"excluded_cycle\": ") + (r.excluded_cycle ? "true" : "false");
  if (!r.note.empty()) out += ",\n  \"note\": \"" + json_escape(r.note) + "\"";
  out += "\n}\n";
  write_output(o.out, out);
  return 0;
}

int cmd_partite(const CommonOpts& o) {
  const SimpleGraph g = input_graph(o);
  const PartiteReport r = circular_partite_analysis(g);
  std::string out = "{\n  \"feasible_k\": [";
  for (std::size_t i = 0; i < r.feasible_k.size(); ++i) {
    out += std::to_string(r.feasible_k[i]);
    if (i + 1 < r.feasible_k.size()) out += ", ";
  }
  out += "],\n  \"max_k\": " + std::to_string(r.max_k) + ",\n";
  out += "  \"witness\": {\"k\": " + std::to_string(r.witness.k) + ", \"labels\": [";
  for (std::size_t i = 0; i < r.witness.label.size(); ++i) {
    out += std::to_string(r.witness.label[i]);
    if (i + 1 < r.witness.label.size()) out += ", ";
  }
  out += "]}\n}\n";
  write_output(o.out, out);
  return 0;
}

int cmd_independence(const CommonOpts& o) {
  const SimpleGraph g = input_graph(o);
  const IndependenceReport r = independence_numbers(g);
  const std::string out = "{\n  \"alpha_out\": " + std::to_string(r.alpha_out) +
                          ",\n  \"alpha_s_out\": " + std::to_string(r.alpha_s_out) +
                          ",\n  \"nb_vertices\": " + std::to_string(2 * g.edge_count()) +
                          "\n}\n";
  write_output(o.out, out);
  return 0;
}

int cmd_verify(const CommonOpts& o, bool csv) {
  const SimpleGraph g = input_graph(o);
  const VerifyReport rep = verify_graph(g, o.tol);
  if (csv) {
    std::string out = "n,M,min_degree,max_degree,max_k,epsilon,E,lower,upper,alpha_out,"
                      "alpha_s_out,checks_passed,checks_failed,ok\n";
    out += std::to_string(g.n) + ',' + std::to_string(g.edge_count()) + ',' +
           std::to_string(g.min_degree()) + ',' + std::to_string(g.max_degree());
    if (g.min_degree() >= 2) {
      const GapReport gr = gap_report(g, o.tol);
      out += ',' + std::to_string(gr.max_k) + ',' + format_double(gr.epsilon) + ',' +
             format_double(gr.big_e) + ',' + format_double(gr.lower_bound) + ',' +
             format_double(gr.upper_bound_thm);
    } else {
      out += ",,,,,";  // max_k, epsilon, E, lower, upper left empty
    }
    if (g.min_degree() >= 2 && 2 * g.edge_count() <= 28) {
      const IndependenceReport ir = independence_numbers(g);
      out += ',' + std::to_string(ir.alpha_out) + ',' + std::to_string(ir.alpha_s_out);
    } else {
      out += ",,";
    }
    out += ',' + std::to_string(rep.passed) + ',' + std::to_string(rep.failed) + ',' +
           (rep.ok() ? "true" : "false") + "\n";
    write_output(o.out, out);
  } else {
    write_output(o.out, verify_report_json(g, o.tol, rep));
  }
  return rep.ok() ? 0 : 1;
}

int cmd_scan(const CommonOpts& o, int max_n, int min_degree, bool allow_n8,
             const std::string& witness_path) {
  const ScanResult r = cospectral_scan(max_n, min_degree, allow_n8, thread_cap());
  write_output(o.out, scan_csv(r));
  if (!witness_path.empty()) {
    std::string w = "{\n";
    bool first_n = true;
    for (const auto& [n, per_op] : r.witnesses) {
      if (!first_n) w += ",\n";
      first_n = false;
      w += "  \"" + std::to_string(n) + "\": {";
      for (int op = 0; op < kOperatorCount; ++op) {
        if (op) w += ", ";
        w += "\"" + operator_name(static_cast<OperatorTag>(op)) + "\": [";
        const auto& pairs = per_op[static_cast<std::size_t>(op)];
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if (i) w += ", ";
          w += "[\"" + json_escape(pairs[i].g6_a) + "\", \"" + json_escape(pairs[i].g6_b) +
               "\"]";
        }
        w += "]";
      }
      w += "}";
    }
    w += "\n}\n";
    write_output(witness_path, w);
  }
  return 0;
}

int cmd_fraction(long long script_n) {
  std::cout << rat_to_string(nb_fraction(script_n)) << "\n";
  return 0;
}

int cmd_plot(const CommonOpts& o) {
  const SimpleGraph g = input_graph(o);
  const NBLaplacian L = build_laplacian(g);
  const Spectrum spec = eigenvalues(L.lap);
  const auto clusters = spec.clustered(1e-6);

  // Window [-0.25, 2.25] x [-1.25, 1.25] around the disc D(1,1).
  const double scale = 240.0;
  const auto sx = [scale](double re) { return (re + 0.25) * scale; };
  const auto sy = [scale](double im) { return (1.25 - im) * scale; };

  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
      "viewBox=\"0 0 600 600\">\n"
      "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  svg += "  <line x1=\"" + format_double(sx(-0.25)) + "\" y1=\"" + format_double(sy(0)) +
         "\" x2=\"" + format_double(sx(2.25)) + "\" y2=\"" + format_double(sy(0)) +
         "\" stroke=\"#cccccc\"/>\n";
  svg += "  <line x1=\"" + format_double(sx(0)) + "\" y1=\"" + format_double(sy(-1.25)) +
         "\" x2=\"" + format_double(sx(0)) + "\" y2=\"" + format_double(sy(1.25)) +
         "\" stroke=\"#cccccc\"/>\n";
  svg += "  <circle cx=\"" + format_double(sx(1)) + "\" cy=\"" + format_double(sy(0)) +
         "\" r=\"" + format_double(scale) +
         "\" fill=\"none\" stroke=\"#4466aa\" stroke-dasharray=\"6 4\"/>\n";
  svg += "  <text x=\"12\" y=\"24\" font-family=\"monospace\" font-size=\"14\">spectrum of the "
         "NB Laplacian, n=" + std::to_string(g.n) + ", M=" + std::to_string(g.edge_count()) +
         " (circle: |1-z| = 1)</text>\n";
  for (const auto& [value, mult] : clusters) {
    svg += "  <circle cx=\"" + format_double(sx(value.real())) + "\" cy=\"" +
           format_double(sy(value.imag())) + "\" r=\"4\" fill=\"#cc2244\"/>\n";
    if (mult > 1) {
      svg += "  <text x=\"" + format_double(sx(value.real()) + 6) + "\" y=\"" +
             format_double(sy(value.imag()) - 6) +
             "\" font-family=\"monospace\" font-size=\"12\">x" + std::to_string(mult) +
             "</text>\n";
    }
  }
  svg += "</svg>\n";
  write_output(o.out, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-backtracking graphs, Laplacians and their spectra"};
  app.require_subcommand(1);

  CommonOpts o;

  CLI::App* build = app.add_subcommand("build", "construct the NB graph (JSON + Matrix Market)");
  add_graph_opts(build, o);

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of a chosen operator");
  add_graph_opts(spectrum, o);
  std::string op_name = "nb-laplacian";
  bool exact = false;
  spectrum->add_option("--operator", op_name,
                       "adjacency | normalized-laplacian | nb-matrix | nb-laplacian");
  spectrum->add_flag("--exact", exact, "include the exact characteristic-polynomial key");

  CLI::App* gap = app.add_subcommand("gap", "spectral gap from 1 with all bounds");
  add_graph_opts(gap, o);

  CLI::App* partite = app.add_subcommand("partite", "circular k-partitions of the NB graph");
  add_graph_opts(partite, o);

  CLI::App* independence =
      app.add_subcommand("independence", "exact out-independence numbers of the NB graph");
  add_graph_opts(independence, o);

  CLI::App* verify = app.add_subcommand("verify", "run the full named-check suite");
  add_graph_opts(verify, o);
  bool verify_csv = false;
  verify->add_flag("--csv", verify_csv, "one-line CSV summary instead of JSON");

  CLI::App* scan = app.add_subcommand("scan", "cospectrality scan over an enumeration");
  int max_n = 7, min_degree = 2;
  bool allow_n8 = false;
  std::string witness_path;
  scan->add_option("--max-n", max_n, "largest vertex count (3..8)")->check(CLI::Range(3, 8));
  scan->add_option("--min-degree", min_degree, "minimum degree filter (>= 2)");
  scan->add_flag("--allow-n8", allow_n8, "enable the minutes-long n = 8 stage");
  scan->add_option("--out", o.out, "CSV output file (default: stdout)");
  scan->add_option("--witnesses", witness_path, "also write cospectral pairs as JSON");

  CLI::App* fraction =
      app.add_subcommand("fraction", "probability that a random digraph is an NB graph");
  long long script_n = 0;
  fraction->add_option("--n", script_n, "number of digraph nodes")->required();

  CLI::App* plot = app.add_subcommand("plot", "SVG of the NB Laplacian spectrum in D(1,1)");
  add_graph_opts(plot, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(o);
    if (spectrum->parsed()) return cmd_spectrum(o, op_name, exact);
    if (gap->parsed()) return cmd_gap(o);
    if (partite->parsed()) return cmd_partite(o);
    if (independence->parsed()) return cmd_independence(o);
    if (verify->parsed()) return cmd_verify(o, verify_csv);
    if (scan->parsed()) return cmd_scan(o, max_n, min_degree, allow_n8, witness_path);
    if (fraction->parsed()) return cmd_fraction(script_n);
    if (plot->parsed()) return cmd_plot(o);
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const capability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
