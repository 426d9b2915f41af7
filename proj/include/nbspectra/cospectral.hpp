#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "nbspectra/graph.hpp"
#include "nbspectra/rational.hpp"

namespace nbspectra {

// The four operators whose spectra are compared across an enumeration.
enum class OperatorTag {
  adjacency,             // A of the base graph
  normalized_laplacian,  // Id - D^-1 A of the base graph
  nb_matrix,             // B^T, the transposed arc matrix of the NB graph
  nb_laplacian,          // Id - D^-1 A of the NB graph
};
constexpr int kOperatorCount = 4;

OperatorTag parse_operator(const std::string& name);
std::string operator_name(OperatorTag tag);

// Dense rational matrix of the chosen operator.
RationalMatrix operator_matrix(const SimpleGraph& g, OperatorTag tag);

// Exact spectral key: the canonical denominator-cleared integer form of the
// operator's characteristic polynomial. Two graphs share a key if and only if
// they are exactly cospectral for that operator.
std::string spectral_key(const SimpleGraph& g, OperatorTag tag);

struct WitnessPair {
  std::string g6_a;
  std::string g6_b;
};

struct ScanRow {
  std::string label;  // "3", "4", ... or the aggregate "4-6"
  long long graphs = 0;
  // Graphs lying in a cospectral class of size >= 2, per operator, in the
  // order adjacency, normalized_laplacian, nb_matrix, nb_laplacian.
  std::array<long long, kOperatorCount> in_class = {0, 0, 0, 0};
};

struct ScanResult {
  int n_max = 0;
  int min_degree = 2;
  std::vector<ScanRow> rows;
  // All unordered pairs within each nontrivial exact-key class, keyed by n.
  std::map<int, std::array<std::vector<WitnessPair>, kOperatorCount>> witnesses;
};

// Enumerates all isomorphism classes with 3 <= n <= n_max and the given
// minimum degree, and counts exact cospectral collisions for each operator.
// Keys are confirmed with exact characteristic polynomials; an exact integer
// trace signature (closed-walk counts) prefilters candidate groups so the
// expensive confirmation only runs on genuine near-collisions. n_max = 8 must
// be enabled explicitly; n_max > 8 is out of scope.
ScanResult cospectral_scan(int n_max, int min_degree, bool allow_n8, int threads);

// Table-shaped CSV: header n,graphs,A,L,NB_A,NB_L and one row per scan row.
std::string scan_csv(const ScanResult& result);

}  // namespace nbspectra
