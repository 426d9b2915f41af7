#include "nbspectra/counting.hpp"

#include <set>
#include <vector>

#include "nbspectra/graph.hpp"
#include "nbspectra/nb.hpp"

namespace nbspectra {

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int count_min_degree_graphs(int n, long long m) {
  if (n < 0 || m < 0) throw domain_error("counts need n, m >= 0");
  Int total = 0;
  for (int k = 0; k <= n; ++k) {
    unsigned long rest = static_cast<unsigned long>(n - k);
    unsigned long pairs = rest * (rest - (rest > 0 ? 1 : 0)) / 2;
    Int term = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
               binomial(pairs, static_cast<unsigned long>(m));
    if (k % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Rat nb_fraction(long long script_n) {
  if (script_n < 1) throw domain_error("node count must be >= 1");
  if (script_n % 2 != 0) return Rat(0);
  long long m = script_n / 2;
  Int numerator = 0;
  for (long long n = 1; n <= script_n; ++n) numerator += count_min_degree_graphs(static_cast<int>(n), m);
  Int denominator = 1;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 2,
                static_cast<unsigned long>(script_n * (script_n - 1)));
  Rat r(numerator, denominator);
  r.canonicalize();
  return r;
}

DigraphImageCount nb_image_digraph_count(int m) {
  if (m < 1) throw domain_error("edge count must be >= 1");
  if (m > 2) throw capability_error("digraph image enumeration capped at m <= 2");
  int nodes = 2 * m;

  // Arc bitmask index for ordered pair (i, j), i != j.
  auto arc_bit = [nodes](int i, int j) { return i * (nodes - 1) + (j > i ? j - 1 : j); };

  DigraphImageCount out;
  std::set<unsigned long long> images;
  // All labeled base graphs with exactly m edges on vertex sets {0..n-1},
  // n <= 2m, with no isolated vertex.
  for (int n = 1; n <= nodes; ++n) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    int np = static_cast<int>(all_pairs.size());
    if (np < m) continue;
    // Choose m of the pairs.
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
      std::vector<std::pair<int, int>> edges;
      for (int i : idx) edges.push_back(all_pairs[i]);
      auto g = SimpleGraph::from_edges(n, edges);
      if (g.min_degree() >= 1) {
        auto nb = build_nb(g);
        unsigned long long mask = 0;
        for (int i = 0; i < nb.size(); ++i)
          for (int j : nb.succ[i]) mask |= 1ull << arc_bit(i, j);
        ++out.occurrences;
        images.insert(mask);
      }
      // Next combination.
      int t = m - 1;
      while (t >= 0 && idx[t] == np - m + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int s = t + 1; s < m; ++s) idx[s] = idx[s - 1] + 1;
    }
  }
  out.distinct = static_cast<long long>(images.size());
  return out;
}

}  // namespace nbspectra
