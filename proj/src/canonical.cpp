#include "nbspectra/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <unordered_set>

namespace nbspectra {

std::string CanonicalForm::key() const {
  std::string s = std::to_string(n) + ":";
  s.reserve(s.size() + bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

SimpleGraph CanonicalForm::graph() const {
  std::vector<std::pair<int, int>> e;
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (bits[idx]) e.emplace_back(i, j);
  return SimpleGraph::from_edges(n, std::move(e));
}

namespace {

class CanonSearcher {
 public:
  explicit CanonSearcher(const SimpleGraph& g) : n_(g.n), adj_(g.n, std::vector<std::uint8_t>(g.n, 0)) {
    for (auto [u, v] : g.edges) adj_[u][v] = adj_[v][u] = 1;
  }

  CanonicalForm run() {
    chosen_.reserve(n_);
    cur_.reserve(n_ * (n_ - 1) / 2);
    used_.assign(n_, 0);
    dfs(true);
    CanonicalForm cf;
    cf.n = n_;
    cf.bits = std::move(best_);
    cf.perm = std::move(best_perm_);
    return cf;
  }

 private:
  // tied == true while the current prefix equals the best prefix bit-for-bit;
  // once strictly below, the subtree is explored without further comparison.
  void dfs(bool tied) {
    int d = static_cast<int>(chosen_.size());
    if (d == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        best_perm_ = chosen_;
        have_best_ = true;
      }
      return;
    }
    // Column bits of candidate u against the already placed vertices, packed
    // most-significant-first so integer order equals lexicographic order.
    std::uint64_t min_col = ~0ull;
    std::vector<std::pair<std::uint64_t, int>> cand;
    cand.reserve(n_ - d);
    for (int u = 0; u < n_; ++u) {
      if (used_[u]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < d; ++i) col = (col << 1) | adj_[chosen_[i]][u];
      cand.emplace_back(col, u);
      min_col = std::min(min_col, col);
    }
    // Only minimal columns can start a lexicographically minimal completion
    // of this prefix.
    if (tied && have_best_) {
      std::uint64_t best_col = 0;
      std::size_t base = cur_.size();
      for (int i = 0; i < d; ++i) best_col = (best_col << 1) | best_[base + i];
      if (min_col > best_col) return;
      if (min_col < best_col) tied = false;
    }
    for (auto [col, u] : cand) {
      if (col != min_col) continue;
      used_[u] = 1;
      chosen_.push_back(u);
      for (int i = d - 1; i >= 0; --i) cur_.push_back(static_cast<std::uint8_t>((col >> i) & 1));
      dfs(tied);
      cur_.resize(cur_.size() - d);
      chosen_.pop_back();
      used_[u] = 0;
    }
  }

  int n_;
  std::vector<std::vector<std::uint8_t>> adj_;
  std::vector<int> chosen_, best_perm_;
  std::vector<std::uint8_t> cur_, best_;
  std::vector<char> used_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
  if (g.n > 12) throw capability_error("canonical form is exhaustive; capped at n <= 12");
  if (g.n == 0) return CanonicalForm{};
  return CanonSearcher(g).run();
}

namespace {

std::vector<std::vector<int>> sorted_neighbor_degrees(const SimpleGraph& g) {
  auto adj = g.adjacency_lists();
  auto deg = g.degrees();
  std::vector<std::vector<int>> nd(g.n);
  for (int v = 0; v < g.n; ++v) {
    for (int w : adj[v]) nd[v].push_back(deg[w]);
    std::sort(nd[v].begin(), nd[v].end());
  }
  return nd;
}

}  // namespace

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n > 10 || b.n > 10)
    throw capability_error("isomorphism backtracking is capped at n <= 10");
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  int n = a.n;
  if (n == 0) return true;

  auto da = a.degrees(), db = b.degrees();
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  auto nda = sorted_neighbor_degrees(a), ndb = sorted_neighbor_degrees(b);
  {
    auto sa = nda, sb = ndb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<std::vector<std::uint8_t>> aa(n, std::vector<std::uint8_t>(n, 0)),
      ab(n, std::vector<std::uint8_t>(n, 0));
  for (auto [u, v] : a.edges) aa[u][v] = aa[v][u] = 1;
  for (auto [u, v] : b.edges) ab[u][v] = ab[v][u] = 1;

  // Order a's vertices: highest degree first, then preferring vertices
  // attached to already ordered ones so adjacency constraints bind early.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1, pick_links = -1, pick_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order) links += aa[u][v];
      if (links > pick_links || (links == pick_links && da[v] > pick_deg)) {
        pick = v;
        pick_links = links;
        pick_deg = da[v];
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<int> map_ab(n, -1);
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w] || nda[v] != ndb[w]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i)
        if (aa[order[i]][v] != ab[map_ab[order[i]]][w]) ok = false;
      if (!ok) continue;
      used[w] = 1;
      map_ab[v] = w;
      if (self(self, depth + 1)) return true;
      used[w] = 0;
      map_ab[v] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

namespace {

constexpr int pair_index(int i, int j) {  // requires i < j
  return j * (j - 1) / 2 + i;
}

// Exhaustive bitmask enumeration for n <= 7: filter by min degree, keep only
// masks not reducible by a single transposition, then deduplicate by full
// canonical form.
std::vector<SimpleGraph> enumerate_masks(int n, int min_degree) {
  int npairs = n * (n - 1) / 2;
  std::vector<std::uint32_t> vmask(n, 0);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      vmask[i] |= 1u << pair_index(i, j);
      vmask[j] |= 1u << pair_index(i, j);
    }
  // Bit permutation tables for each transposition (a, b).
  std::vector<std::array<std::uint8_t, 32>> tperm;
  for (int pa = 0; pa < n; ++pa)
    for (int pb = pa + 1; pb < n; ++pb) {
      std::array<std::uint8_t, 32> t{};
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
          int mi = i == pa ? pb : (i == pb ? pa : i);
          int mj = j == pa ? pb : (j == pb ? pa : j);
          if (mi > mj) std::swap(mi, mj);
          t[pair_index(i, j)] = static_cast<std::uint8_t>(pair_index(mi, mj));
        }
      tperm.push_back(t);
    }

  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, SimpleGraph>> classes;
  const std::uint64_t total = 1ull << npairs;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool deg_ok = true;
    for (int v = 0; v < n && deg_ok; ++v)
      if (std::popcount(static_cast<std::uint32_t>(mask) & vmask[v]) < min_degree) deg_ok = false;
    if (!deg_ok) continue;
    bool minimal = true;
    for (const auto& t : tperm) {
      std::uint32_t img = 0;
      std::uint32_t rest = static_cast<std::uint32_t>(mask);
      while (rest) {
        int bit = std::countr_zero(rest);
        rest &= rest - 1;
        img |= 1u << t[bit];
      }
      if (img < mask) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;

    std::vector<std::pair<int, int>> e;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (mask >> pair_index(i, j) & 1) e.emplace_back(i, j);
    auto cf = canonical_form(SimpleGraph::from_edges(n, std::move(e)));
    auto k = cf.key();
    if (seen.insert(k).second) classes.emplace_back(std::move(k), cf.graph());
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SimpleGraph> out;
  out.reserve(classes.size());
  for (auto& [k, g] : classes) out.push_back(std::move(g));
  return out;
}

// n = 8 via vertex augmentation: every 8-vertex graph with min degree d
// arises from some 7-vertex graph with min degree >= d-1 by attaching a new
// vertex to a subset S (removing any vertex of such a graph lowers degrees by
// at most one).
std::vector<SimpleGraph> enumerate_augmented_8(int min_degree) {
  int base_min = std::max(0, min_degree - 1);
  auto bases = enumerate_masks(7, base_min);
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, SimpleGraph>> classes;
  for (const auto& g : bases) {
    auto deg = g.degrees();
    std::uint32_t forced = 0;
    for (int v = 0; v < 7; ++v)
      if (deg[v] < min_degree) forced |= 1u << v;
    for (std::uint32_t s = 0; s < (1u << 7); ++s) {
      if ((s & forced) != forced) continue;
      if (std::popcount(s) < min_degree) continue;
      std::vector<std::pair<int, int>> e = g.edges;
      for (int v = 0; v < 7; ++v)
        if (s >> v & 1) e.emplace_back(v, 7);
      auto cf = canonical_form(SimpleGraph::from_edges(8, std::move(e)));
      auto k = cf.key();
      if (seen.insert(k).second) classes.emplace_back(std::move(k), cf.graph());
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<SimpleGraph> out;
  out.reserve(classes.size());
  for (auto& [k, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<SimpleGraph> enumerate_graphs_exact_n(int n, int min_degree, bool allow_n8) {
  if (n < 1) throw domain_error("enumeration needs n >= 1");
  if (n > 8) throw capability_error("enumeration is capped at n <= 8");
  if (n == 8 && !allow_n8)
    throw capability_error("n = 8 enumeration must be enabled explicitly (allow_n8)");
  if (min_degree > n - 1) return {};
  if (n == 8) return enumerate_augmented_8(min_degree);
  return enumerate_masks(n, min_degree);
}

std::vector<SimpleGraph> enumerate_graphs(int n_max, int min_degree, bool allow_n8) {
  if (n_max < 1) throw domain_error("enumeration needs n_max >= 1");
  if (n_max > 8) throw capability_error("enumeration is capped at n <= 8");
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto part = enumerate_graphs_exact_n(n, min_degree, allow_n8);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace nbspectra
