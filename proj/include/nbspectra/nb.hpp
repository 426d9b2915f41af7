#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nbspectra/graph.hpp"
#include "nbspectra/rational.hpp"

namespace nbspectra {

// Non-backtracking graph of a simple graph: one vertex per oriented edge
// [input, output]; an arc [v,w] -> [w,z] for every continuation z ~ w with
// z != v.  Oriented edges are indexed 0..M-1 in the (sorted) order of the
// base edges as [u,v] with u < v, followed by their reversals M..2M-1, so the
// reversal of index i is i +- M.
struct NBGraph {
  int base_n = 0;
  int M = 0;
  std::vector<std::pair<int, int>> verts;  // (input, output) per oriented edge
  std::vector<std::vector<int>> succ;      // NB arcs, sorted targets
  std::vector<int> out_weight;             // deg(output) - 1 == out-degree in NB
  long long arc_count = 0;

  int size() const { return 2 * M; }
  int rev(int i) const { return i < M ? i + M : i - M; }

  std::vector<std::vector<int>> predecessors() const;
  // Component id per NB vertex, ignoring arc direction; ids are 0-based and
  // ordered by first appearance.
  std::vector<int> weak_components() const;
  int weak_component_count() const;
  std::vector<int> strong_components() const;  // Tarjan, 0-based ids
  int strong_component_count() const;
};

// Requires at least one edge.
NBGraph build_nb(const SimpleGraph& g);

// 0/1 matrix A with A[i][j] = 1 iff there is an NB arc i -> j.
RationalMatrix nb_arc_matrix(const NBGraph& nb);
// The transposed convention (columns index successors); same spectrum.
RationalMatrix nb_arc_matrix_transposed(const NBGraph& nb);
// Reversal involution P as a permutation matrix.
RationalMatrix reversal_matrix(const NBGraph& nb);

std::string nb_to_json(const NBGraph& nb);
// Matrix Market "coordinate pattern general" of the arc matrix.
std::string nb_arcs_matrix_market(const NBGraph& nb);

// Equivalence of four conditions for a connected base graph with min degree
// >= 2: (not a cycle graph) <=> (cycle space dimension >= 2) <=> (NB graph
// weakly connected) <=> (NB graph strongly connected).
struct ConnectivityReport {
  bool base_is_cycle = false;
  int cycle_space_dim = 0;
  int weak_components = 0;
  int strong_components = 0;
  bool equivalence_holds = false;
};
ConnectivityReport connectivity_class(const SimpleGraph& g);

// Base-graph statistics recovered from the NB graph alone: M from the vertex
// count, and the number c_j of base vertices of degree j from the NB
// out-degrees (a degree-j vertex is the output of exactly j oriented edges,
// each with out-degree j-1).
struct ReconstructionReport {
  int two_m = 0;
  int m = 0;
  long long vertex_total = 0;
  std::vector<std::pair<int, long long>> degree_counts;  // (degree, count)
  bool consistent = false;  // counts integral and sum of j*c_j == 2M
};
ReconstructionReport reconstruct_stats(const NBGraph& nb);

// Isomorphism on labeled digraphs given by successor lists; independent
// backtracking with iterated in/out-degree color refinement.
bool digraph_isomorphic(const std::vector<std::vector<int>>& succ_a,
                        const std::vector<std::vector<int>>& succ_b);

// Checks that two base graphs are isomorphic iff their NB graphs are
// isomorphic, with both sides decided by independent algorithms.
struct IsoCheckReport {
  bool base_isomorphic = false;
  bool nb_isomorphic = false;
  bool agree = false;
};
IsoCheckReport nb_isomorphism_theorem_check(const SimpleGraph& a, const SimpleGraph& b);

// For a connected base graph: the base is bipartite iff the NB vertex set
// splits in two classes with every arc crossing (i.e. the NB graph is
// circularly 2-partite).  For bipartite bases the two classes are exactly
// the two edge orientations relative to the vertex bipartition.
struct BipartiteNBReport {
  bool base_bipartite = false;
  bool nb_two_partite = false;
  bool equivalent = false;
  // For bipartite bases: every arc leaves the class of edges pointing from
  // part X to part Y and enters the opposite class.
  bool orientation_classes_alternate = false;
};
BipartiteNBReport bipartite_nb_partition_check(const SimpleGraph& g);

}  // namespace nbspectra
