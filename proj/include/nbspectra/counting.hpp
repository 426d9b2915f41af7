#pragma once

#include "nbspectra/rational.hpp"

namespace nbspectra {

Int binomial(unsigned long n, unsigned long k);

// Labeled graphs on n vertices with exactly m edges and no isolated vertex,
// by inclusion-exclusion over the isolated set.
Int count_min_degree_graphs(int n, long long m);

// Probability that a uniformly random labeled digraph on script_n nodes (all
// script_n(script_n-1) ordered pairs independently) equals the
// non-backtracking graph of some labeled simple graph with script_n/2 edges
// and no isolated vertex (vertices 0..N-1, oriented edges in index order).
// Zero for odd script_n.
Rat nb_fraction(long long script_n);

// Brute-force ground truth for the fraction's numerator.  Enumerates every
// labeled base graph with m edges and no isolated vertex (on up to 2m
// vertices), builds its digraph on 2m nodes, and reports two tallies:
//   occurrences — one per base graph; the fraction counts digraphs this way,
//                 so a digraph reachable from k base graphs contributes k;
//   distinct    — distinct labeled digraphs under the fixed edge ordering.
// The two differ already at m = 2: the three labeled perfect matchings on
// four vertices all map to the empty digraph on four nodes (occurrences 6,
// distinct 4).  Capped at m <= 2 (digraphs on <= 4 nodes).
struct DigraphImageCount {
  long long occurrences = 0;
  long long distinct = 0;
};
DigraphImageCount nb_image_digraph_count(int m);

}  // namespace nbspectra
