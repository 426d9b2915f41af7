#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nbspectra/errors.hpp"

namespace nbspectra {

// Simple undirected graph on vertices 0..n-1.  Edges are stored sorted, each
// as (u, v) with u < v, with no duplicates and no self-loops.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  // Validates and normalizes an edge list (orders endpoints, sorts, rejects
  // self-loops, duplicates and out-of-range endpoints).
  static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> e);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;

  std::vector<int> degrees() const;
  int min_degree() const;  // n == 0 -> 0
  int max_degree() const;

  std::vector<std::vector<int>> adjacency_lists() const;

  int component_count() const;
  bool is_connected() const { return n <= 1 || component_count() == 1; }
  // Two-colorability of every component.
  bool is_bipartite() const;
  // Connected and 2-regular.
  bool is_cycle_graph() const;
  // Some connected component is a cycle (2-regular component).
  bool has_cycle_component() const;
  // Number of independent cycles M - n + #components.
  int cycle_space_dimension() const;

  bool operator==(const SimpleGraph& o) const = default;
};

// --- text formats ------------------------------------------------------------

// One-line graph6 string (standard format, n <= 62 supported here).
SimpleGraph parse_graph6(const std::string& line);
// Serializes under the *current* labeling, so to_graph6(parse_graph6(s)) == s.
std::string to_graph6(const SimpleGraph& g);

// Whitespace-separated "u v" pairs; '#' starts a comment to end of line.  The
// vertex count defaults to 1 + max endpoint; a line "n <count>" overrides it.
SimpleGraph parse_edge_list(const std::string& text);
std::string to_edge_list(const SimpleGraph& g);

// JSON object {"n": int, "edges": [[u,v], ...]}.
SimpleGraph graph_from_json(const std::string& text);
std::string graph_to_json(const SimpleGraph& g);

// Reads a graph file, dispatching on extension: .g6 (graph6), .json, anything
// else is treated as an edge list.
SimpleGraph load_graph_file(const std::string& path);

// --- generators --------------------------------------------------------------

SimpleGraph cycle_graph(int n);     // n >= 3
SimpleGraph complete_graph(int n);  // n >= 2
SimpleGraph path_graph(int m);      // path with m >= 1 edges
// Flower with p >= 1 petals, each a cycle of length k >= 3 through vertex 0.
// Center has degree 2p; every other vertex has degree 2.
SimpleGraph petal_graph(int p, int k);
SimpleGraph wheel_graph(int n);  // hub + rim cycle of length n-1, n >= 4
SimpleGraph star_graph(int leaves);
SimpleGraph complete_bipartite_graph(int a, int b);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

// "cycle:5", "complete:4", "petal:2,3", "wheel:11", "path:3", "star:4",
// "kbipartite:3,3".
SimpleGraph parse_generator_spec(const std::string& spec);

// Line graph: one vertex per edge of g, adjacent when the edges share an
// endpoint.  Vertex i of the result corresponds to g.edges[i].
SimpleGraph line_graph(const SimpleGraph& g);

}  // namespace nbspectra
