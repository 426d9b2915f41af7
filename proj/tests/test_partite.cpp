#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/canonical.hpp"
#include "nbspectra/graph.hpp"
#include "nbspectra/nb.hpp"
#include "nbspectra/partite.hpp"

using namespace nbspectra;

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> d;
  for (int k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

// Exact k-colorability of the undirected graph underlying the NB digraph,
// by plain backtracking.  Used only to exhibit a witness that NB
// k-colorability does not imply circular k-partiteness.
bool underlying_k_colorable(const NBGraph& nb, int k) {
  int n = nb.size();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j : nb.succ[i]) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  std::vector<int> color(n, -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int w : adj[v])
        if (color[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1)) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("cycles are circularly k-partite exactly for divisors of their length") {
  for (int n = 3; n <= 8; ++n) {
    PartiteReport r = circular_partite_analysis(cycle_graph(n));
    CHECK(r.feasible_k == divisors(n));
    CHECK(r.max_k == n);
  }
}

TEST_CASE("2-partiteness is bipartiteness") {
  for (const SimpleGraph& g : enumerate_graphs(6, 1)) {
    PartiteReport r = circular_partite_analysis(g);
    bool two = std::find(r.feasible_k.begin(), r.feasible_k.end(), 2) != r.feasible_k.end();
    CHECK(two == g.is_bipartite());
    CHECK(r.feasible_k.front() == 1);
  }
}

TEST_CASE("fast analysis agrees with the brute-force oracle") {
  int graphs = 0;
  for (const SimpleGraph& g : enumerate_graphs(5, 1)) {
    int two_m = 2 * g.edge_count();
    if (two_m > 16) continue;
    ++graphs;
    PartiteReport r = circular_partite_analysis(g);
    for (int k = 1; k <= two_m; ++k) {
      bool fast = std::find(r.feasible_k.begin(), r.feasible_k.end(), k) != r.feasible_k.end();
      CHECK(fast == brute_force_partite(g, k));
    }
  }
  CHECK(graphs > 20);

  // Disconnected case: offsets must cover all classes jointly.
  SimpleGraph two_cycles = disjoint_union(cycle_graph(3), cycle_graph(4));
  PartiteReport r = circular_partite_analysis(two_cycles);
  for (int k = 1; k <= 14; ++k) {
    bool fast = std::find(r.feasible_k.begin(), r.feasible_k.end(), k) != r.feasible_k.end();
    CHECK(fast == brute_force_partite(two_cycles, k));
  }
  CHECK(r.feasible_k == std::vector<int>{1});
}

TEST_CASE("petal graphs attain their petal length") {
  for (auto [p, k] : {std::pair{2, 3}, {3, 3}, {2, 4}, {2, 5}}) {
    PartiteReport r = circular_partite_analysis(petal_graph(p, k));
    CHECK(r.max_k == k);
    CHECK(r.feasible_k == divisors(k));
  }
}

TEST_CASE("feasible sets are divisor-closed") {
  for (const SimpleGraph& g : enumerate_graphs(6, 2)) {
    PartiteReport r = circular_partite_analysis(g);
    for (int k : r.feasible_k)
      for (int d : divisors(k))
        CHECK(std::find(r.feasible_k.begin(), r.feasible_k.end(), d) != r.feasible_k.end());
  }
}

TEST_CASE("witness labelings satisfy the arc constraint with all classes non-empty") {
  for (const SimpleGraph& g : enumerate_graphs(5, 2)) {
    PartiteReport r = circular_partite_analysis(g);
    NBGraph nb = build_nb(g);
    const CircularPartition& w = r.witness;
    REQUIRE(w.k == r.max_k);
    REQUIRE(static_cast<int>(w.label.size()) == nb.size());
    std::vector<int> seen(w.k, 0);
    for (int i = 0; i < nb.size(); ++i) {
      CHECK(0 <= w.label[i]);
      CHECK(w.label[i] < w.k);
      ++seen[w.label[i]];
      for (int j : nb.succ[i]) CHECK(w.label[j] == (w.label[i] + 1) % w.k);
    }
    for (int c : seen) CHECK(c > 0);
  }
}

TEST_CASE("roots of unity are eigenvalues of the walk matrix") {
  for (const SimpleGraph& g : enumerate_graphs(5, 2)) {
    PartiteReport r = circular_partite_analysis(g);
    for (int k : r.feasible_k) {
      RootsOfUnityReport ru = roots_of_unity_eigenvalues(g, k);
      CHECK(ru.charpoly_divisible);
      CHECK(ru.max_eigen_residual <= 1e-9);
    }
  }
}

TEST_CASE("NB k-colorability does not imply circular k-partiteness") {
  // Search the small enumeration for a witness: the NB graph admits a proper
  // k-coloring of its underlying undirected graph, yet no circular
  // k-partition exists.
  bool found = false;
  std::string witness;
  for (const SimpleGraph& g : enumerate_graphs(6, 2)) {
    PartiteReport r = circular_partite_analysis(g);
    NBGraph nb = build_nb(g);
    for (int k = 2; k <= 3 && !found; ++k) {
      bool feasible = std::find(r.feasible_k.begin(), r.feasible_k.end(), k) != r.feasible_k.end();
      if (!feasible && underlying_k_colorable(nb, k)) {
        found = true;
        witness = to_graph6(g);
      }
    }
    if (found) break;
  }
  CHECK(found);
  MESSAGE("witness: ", witness);
}

TEST_CASE("brute force rejects oversize inputs") {
  CHECK_THROWS_AS(brute_force_partite(complete_graph(5), 2), capability_error);
}
