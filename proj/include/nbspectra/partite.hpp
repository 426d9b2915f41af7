#pragma once

#include <vector>

#include "nbspectra/graph.hpp"

namespace nbspectra {

struct NBGraph;

// A circular k-partition of the NB vertex set: label(e) in {0..k-1} with
// label(succ) = label(e) + 1 (mod k) along every NB arc, all classes
// non-empty.
struct CircularPartition {
  int k = 1;
  std::vector<int> label;  // per NB vertex index
};

struct PartiteReport {
  std::vector<int> feasible_k;  // ascending, always contains 1
  int max_k = 1;
  CircularPartition witness;  // for max_k
};

// Fast analysis: potentials along each weak component give all label
// constraints up to one offset per component; a closed walk of signed length
// s forces k | s, so per-component feasibility is divisibility of the gcd of
// walk discrepancies, and class non-emptiness reduces to covering Z_k by
// shifted potential intervals.  Requires at least one edge.
PartiteReport circular_partite_analysis(const SimpleGraph& g);

// Ground-truth oracle: per weak component, try all k offsets of the unique
// propagated labeling and verify every arc; then search offset combinations
// for full class coverage (bitmask DP over residues).  Capped at 2M <= 16.
bool brute_force_partite(const SimpleGraph& g, int k);

// For a graph that is circularly k-partite (k from the fast analysis): the
// exact characteristic polynomial of D^-1 A is divisible by x^k - 1, and each
// k-th root of unity w has the explicit eigenfunction f(e) = w^label(e).
struct RootsOfUnityReport {
  int k = 1;
  bool charpoly_divisible = false;  // exact division by x^k - 1
  double max_eigen_residual = 0.0;  // worst ||D^-1 A f - w f||_inf over roots
};
RootsOfUnityReport roots_of_unity_eigenvalues(const SimpleGraph& g, int k);

}  // namespace nbspectra
