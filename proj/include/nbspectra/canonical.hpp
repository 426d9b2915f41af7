#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nbspectra/graph.hpp"

namespace nbspectra {

// Canonical form of a simple graph: the lexicographically minimal adjacency
// bitstring over all vertex relabelings.  Bits run over the upper triangle in
// column-major order ((0,1), (0,2), (1,2), (0,3), ...), matching graph6 bit
// order, so two graphs are isomorphic iff their canonical forms are equal.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> bits;  // size n*(n-1)/2, entries 0/1
  // One relabeling that realizes the minimal bitstring: perm[position] = old
  // vertex placed at this position.
  std::vector<int> perm;

  std::string key() const;  // "n:010110..." — usable as a hash-map key
  SimpleGraph graph() const;  // the canonically labeled copy
  auto operator<=>(const CanonicalForm& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    return bits <=> o.bits;
  }
  bool operator==(const CanonicalForm& o) const { return n == o.n && bits == o.bits; }
};

// Exhaustive branch-and-bound over vertex orderings (ties explored fully).
// Intended for n <= 10.
CanonicalForm canonical_form(const SimpleGraph& g);

// Independent isomorphism test by backtracking with degree and
// neighbor-degree-multiset pruning.  Capped at n <= 10.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// All isomorphism classes with min degree >= min_degree on at most n_max
// vertices, one canonically labeled representative each, ordered by vertex
// count then canonical bitstring.  Exhaustive bitmask enumeration for n <= 7;
// n = 8 is reached by augmenting 7-vertex classes with one extra vertex and
// must be enabled explicitly (it is slower).  n_max > 8 is refused.
std::vector<SimpleGraph> enumerate_graphs(int n_max, int min_degree, bool allow_n8 = false);

// Single-n variant used by the cospectrality scan.
std::vector<SimpleGraph> enumerate_graphs_exact_n(int n, int min_degree, bool allow_n8 = false);

}  // namespace nbspectra
