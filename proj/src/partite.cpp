#include "nbspectra/partite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <complex>
#include <numeric>
#include <queue>
#include <set>

#include "nbspectra/charpoly.hpp"
#include "nbspectra/nb.hpp"

namespace nbspectra {

namespace {

struct ComponentData {
  std::vector<int> members;
  std::vector<long long> pot;  // aligned with members
  long long gcd = 0;           // of closed-walk discrepancies; 0 = acyclic constraints
  long long pot_min = 0, pot_max = 0;
  long long interval_length() const { return pot_max - pot_min + 1; }
};

// BFS potentials per weak component: pot(target) = pot(source) + 1 along
// every arc; non-tree arcs contribute |pot(u) + 1 - pot(v)| to the gcd.
std::vector<ComponentData> component_potentials(const NBGraph& nb) {
  auto pred = nb.predecessors();
  int n = nb.size();
  std::vector<long long> pot(n, 0);
  std::vector<int> comp_of(n, -1);
  std::vector<ComponentData> comps;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] != -1) continue;
    ComponentData cd;
    int id = static_cast<int>(comps.size());
    std::queue<int> q;
    q.push(s);
    comp_of[s] = id;
    pot[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      cd.members.push_back(u);
      for (int w : nb.succ[u]) {
        if (comp_of[w] == -1) {
          comp_of[w] = id;
          pot[w] = pot[u] + 1;
          q.push(w);
        }
      }
      for (int w : pred[u]) {
        if (comp_of[w] == -1) {
          comp_of[w] = id;
          pot[w] = pot[u] - 1;
          q.push(w);
        }
      }
    }
    for (int u : cd.members)
      for (int w : nb.succ[u]) {
        long long d = pot[u] + 1 - pot[w];
        cd.gcd = std::gcd(cd.gcd, std::llabs(d));
      }
    cd.pot_min = cd.pot_max = pot[cd.members.front()];
    for (int u : cd.members) {
      cd.pot_min = std::min(cd.pot_min, pot[u]);
      cd.pot_max = std::max(cd.pot_max, pot[u]);
    }
    cd.pot.reserve(cd.members.size());
    for (int u : cd.members) cd.pot.push_back(pot[u]);
    comps.push_back(std::move(cd));
  }
  return comps;
}

bool feasible_for_k(const std::vector<ComponentData>& comps, int k) {
  long long coverage = 0;
  for (const auto& cd : comps) {
    if (cd.gcd != 0 && cd.gcd % k != 0) return false;
    coverage += std::min<long long>(cd.interval_length(), k);
  }
  return coverage >= k;
}

// Builds an explicit labeling for a feasible k: each component is labeled by
// its (shifted) potentials; components are rotated so their residue intervals
// tile Z_k consecutively, which guarantees non-empty classes.
CircularPartition make_partition(const NBGraph& nb, const std::vector<ComponentData>& comps,
                                 int k) {
  CircularPartition p;
  p.k = k;
  p.label.assign(nb.size(), 0);
  long long start = 0;
  for (const auto& cd : comps) {
    for (std::size_t t = 0; t < cd.members.size(); ++t) {
      long long rel = cd.pot[t] - cd.pot_min;  // 0 .. interval_length-1
      p.label[cd.members[t]] = static_cast<int>(((rel + start) % k + k) % k);
    }
    start += std::min<long long>(cd.interval_length(), k);
  }
  return p;
}

void validate_partition(const NBGraph& nb, const CircularPartition& p) {
  std::vector<char> nonempty(p.k, 0);
  for (int i = 0; i < nb.size(); ++i) {
    nonempty[p.label[i]] = 1;
    for (int j : nb.succ[i])
      if (p.label[j] != (p.label[i] + 1) % p.k)
        throw numeric_error("internal: circular partition violates an arc constraint");
  }
  for (char c : nonempty)
    if (!c) throw numeric_error("internal: circular partition has an empty class");
}

}  // namespace

PartiteReport circular_partite_analysis(const SimpleGraph& g) {
  auto nb = build_nb(g);
  auto comps = component_potentials(nb);
  PartiteReport r;
  for (int k = 1; k <= nb.size(); ++k)
    if (feasible_for_k(comps, k)) r.feasible_k.push_back(k);
  r.max_k = r.feasible_k.back();
  r.witness = make_partition(nb, comps, r.max_k);
  validate_partition(nb, r.witness);
  return r;
}

bool brute_force_partite(const SimpleGraph& g, int k) {
  if (k < 1) throw domain_error("partition order must be >= 1");
  auto nb = build_nb(g);
  if (nb.size() > 16) throw capability_error("brute-force partiteness capped at 2M <= 16");
  if (k > nb.size()) return false;  // k non-empty classes need k vertices

  auto pred = nb.predecessors();
  int n = nb.size();

  // Weak components, re-derived locally so this oracle shares no logic with
  // the fast analysis beyond the NB construction itself.
  std::vector<int> comp_of(n, -1);
  int comp_count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp_of[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp_of[s] = comp_count;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& nbrs : {std::cref(nb.succ[u]), std::cref(pred[u])})
        for (int w : nbrs.get())
          if (comp_of[w] == -1) {
            comp_of[w] = comp_count;
            q.push(w);
          }
    }
    ++comp_count;
  }

  // Per component and per root label t: propagate, check every arc, record
  // the residue-coverage mask.
  std::vector<std::set<std::uint32_t>> masks(comp_count);
  for (int c = 0; c < comp_count; ++c) {
    int root = -1;
    for (int v = 0; v < n && root < 0; ++v)
      if (comp_of[v] == c) root = v;
    for (int t = 0; t < k; ++t) {
      std::vector<int> label(n, -1);
      std::queue<int> q;
      label[root] = t;
      q.push(root);
      bool ok = true;
      std::uint32_t mask = 0;
      while (!q.empty() && ok) {
        int u = q.front();
        q.pop();
        mask |= 1u << label[u];
        for (int w : nb.succ[u]) {
          int want = (label[u] + 1) % k;
          if (label[w] == -1) {
            label[w] = want;
            q.push(w);
          } else if (label[w] != want) {
            ok = false;
            break;
          }
        }
        for (int w : pred[u]) {
          int want = (label[u] + k - 1) % k;
          if (label[w] == -1) {
            label[w] = want;
            q.push(w);
          } else if (label[w] != want) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      // Re-verify every arc of the component explicitly.
      for (int v = 0; v < n && ok; ++v) {
        if (comp_of[v] != c) continue;
        for (int w : nb.succ[v])
          if (label[w] != (label[v] + 1) % k) {
            ok = false;
            break;
          }
      }
      if (ok) masks[c].insert(mask);
    }
    if (masks[c].empty()) return false;
  }

  // Coverage search over offset choices (as distinct coverage masks).
  std::set<std::uint32_t> reach{0};
  const std::uint32_t full = k == 32 ? ~0u : (1u << k) - 1;
  for (int c = 0; c < comp_count; ++c) {
    std::set<std::uint32_t> next;
    for (std::uint32_t r : reach)
      for (std::uint32_t m : masks[c]) next.insert(r | m);
    reach = std::move(next);
  }
  return reach.count(full) > 0;
}

RootsOfUnityReport roots_of_unity_eigenvalues(const SimpleGraph& g, int k) {
  if (g.min_degree() < 2)
    throw domain_error("roots-of-unity eigenvalue check needs min degree >= 2");
  auto nb = build_nb(g);
  auto comps = component_potentials(nb);
  if (!feasible_for_k(comps, k))
    throw domain_error("graph is not circularly " + std::to_string(k) + "-partite");

  RootsOfUnityReport r;
  r.k = k;

  // Exact: char poly of D^-1 A divisible by x^k - 1.
  RationalMatrix walk(nb.size(), nb.size());
  for (int i = 0; i < nb.size(); ++i)
    for (int j : nb.succ[i]) walk.at(i, j) = Rat(1, nb.out_weight[i]);
  r.charpoly_divisible = char_poly(walk).divisible_by_x_pow_k_minus_1(k);

  // Numeric: f(e) = w^label(e) is an eigenfunction for each k-th root w.
  auto part = make_partition(nb, comps, k);
  validate_partition(nb, part);
  const double pi = std::acos(-1.0);
  for (int j = 0; j < k; ++j) {
    std::complex<double> w = std::polar(1.0, 2.0 * pi * j / k);
    std::vector<std::complex<double>> f(nb.size());
    for (int i = 0; i < nb.size(); ++i) f[i] = std::pow(w, part.label[i]);
    for (int i = 0; i < nb.size(); ++i) {
      std::complex<double> acc = 0;
      for (int t : nb.succ[i]) acc += f[t];
      acc /= static_cast<double>(nb.out_weight[i]);
      r.max_eigen_residual = std::max(r.max_eigen_residual, std::abs(acc - w * f[i]));
    }
  }
  return r;
}

}  // namespace nbspectra
