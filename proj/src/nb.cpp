#include "nbspectra/nb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "json.hpp"
#include "nbspectra/canonical.hpp"
#include "nbspectra/partite.hpp"

namespace nbspectra {

NBGraph build_nb(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw domain_error("non-backtracking graph needs at least one edge");
  NBGraph nb;
  nb.base_n = g.n;
  nb.M = g.edge_count();
  nb.verts.resize(2 * nb.M);
  for (int i = 0; i < nb.M; ++i) {
    auto [u, v] = g.edges[i];
    nb.verts[i] = {u, v};          // [u, v]: input u, output v
    nb.verts[i + nb.M] = {v, u};   // reversal
  }
  auto deg = g.degrees();
  auto adj = g.adjacency_lists();
  for (auto& l : adj) std::sort(l.begin(), l.end());

  // Oriented-edge index by (input, output).
  std::vector<std::vector<std::pair<int, int>>> by_input(g.n);
  for (int i = 0; i < 2 * nb.M; ++i) by_input[nb.verts[i].first].emplace_back(nb.verts[i].second, i);
  for (auto& l : by_input) std::sort(l.begin(), l.end());
  auto edge_index = [&](int inp, int out) {
    const auto& l = by_input[inp];
    auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(out, -1));
    return it->second;
  };

  nb.succ.resize(2 * nb.M);
  nb.out_weight.resize(2 * nb.M);
  for (int i = 0; i < 2 * nb.M; ++i) {
    auto [v, w] = nb.verts[i];
    nb.out_weight[i] = deg[w] - 1;
    for (int z : adj[w])
      if (z != v) nb.succ[i].push_back(edge_index(w, z));
    std::sort(nb.succ[i].begin(), nb.succ[i].end());
    nb.arc_count += static_cast<long long>(nb.succ[i].size());
  }
  return nb;
}

std::vector<std::vector<int>> NBGraph::predecessors() const {
  std::vector<std::vector<int>> pred(size());
  for (int i = 0; i < size(); ++i)
    for (int j : succ[i]) pred[j].push_back(i);
  for (auto& l : pred) std::sort(l.begin(), l.end());
  return pred;
}

std::vector<int> NBGraph::weak_components() const {
  auto pred = predecessors();
  std::vector<int> comp(size(), -1);
  int next = 0;
  for (int s = 0; s < size(); ++s) {
    if (comp[s] != -1) continue;
    int id = next++;
    std::queue<int> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const auto& nbrs : {std::cref(succ[u]), std::cref(pred[u])})
        for (int w : nbrs.get())
          if (comp[w] == -1) {
            comp[w] = id;
            q.push(w);
          }
    }
  }
  return comp;
}

int NBGraph::weak_component_count() const {
  auto c = weak_components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

std::vector<int> NBGraph::strong_components() const {
  // Iterative Tarjan.
  int n = size();
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack_v, call_v, call_i;
  std::vector<char> on_stack(n, 0);
  int counter = 0, next_comp = 0;
  for (int s = 0; s < n; ++s) {
    if (num[s] != -1) continue;
    call_v.push_back(s);
    call_i.push_back(0);
    while (!call_v.empty()) {
      int v = call_v.back();
      int& i = call_i.back();
      if (i == 0) {
        num[v] = low[v] = counter++;
        stack_v.push_back(v);
        on_stack[v] = 1;
      }
      if (i < static_cast<int>(succ[v].size())) {
        int w = succ[v][i++];
        if (num[w] == -1) {
          call_v.push_back(w);
          call_i.push_back(0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        if (low[v] == num[v]) {
          int id = next_comp++;
          while (true) {
            int w = stack_v.back();
            stack_v.pop_back();
            on_stack[w] = 0;
            comp[w] = id;
            if (w == v) break;
          }
        }
        call_v.pop_back();
        call_i.pop_back();
        if (!call_v.empty()) {
          int parent = call_v.back();
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  return comp;
}

int NBGraph::strong_component_count() const {
  auto c = strong_components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

RationalMatrix nb_arc_matrix(const NBGraph& nb) {
  RationalMatrix a(nb.size(), nb.size());
  for (int i = 0; i < nb.size(); ++i)
    for (int j : nb.succ[i]) a.at(i, j) = 1;
  return a;
}

RationalMatrix nb_arc_matrix_transposed(const NBGraph& nb) {
  RationalMatrix a(nb.size(), nb.size());
  for (int i = 0; i < nb.size(); ++i)
    for (int j : nb.succ[i]) a.at(j, i) = 1;
  return a;
}

RationalMatrix reversal_matrix(const NBGraph& nb) {
  RationalMatrix p(nb.size(), nb.size());
  for (int i = 0; i < nb.size(); ++i) p.at(i, nb.rev(i)) = 1;
  return p;
}

std::string nb_to_json(const NBGraph& nb) {
  nlohmann::json j;
  j["base_n"] = nb.base_n;
  j["m"] = nb.M;
  j["vertices"] = nlohmann::json::array();
  for (int i = 0; i < nb.size(); ++i) {
    nlohmann::json v;
    v["index"] = i;
    v["input"] = nb.verts[i].first;
    v["output"] = nb.verts[i].second;
    v["reversal"] = nb.rev(i);
    v["successors"] = nb.succ[i];
    j["vertices"].push_back(std::move(v));
  }
  j["arc_count"] = nb.arc_count;
  return j.dump(2);
}

std::string nb_arcs_matrix_market(const NBGraph& nb) {
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate pattern general\n";
  os << nb.size() << " " << nb.size() << " " << nb.arc_count << "\n";
  for (int i = 0; i < nb.size(); ++i)
    for (int j : nb.succ[i]) os << i + 1 << " " << j + 1 << "\n";
  return os.str();
}

ConnectivityReport connectivity_class(const SimpleGraph& g) {
  if (!g.is_connected()) throw domain_error("connectivity classification needs a connected graph");
  if (g.min_degree() < 2) throw domain_error("connectivity classification needs min degree >= 2");
  auto nb = build_nb(g);
  ConnectivityReport r;
  r.base_is_cycle = g.is_cycle_graph();
  r.cycle_space_dim = g.cycle_space_dimension();
  r.weak_components = nb.weak_component_count();
  r.strong_components = nb.strong_component_count();
  bool not_cycle = !r.base_is_cycle;
  r.equivalence_holds = (not_cycle == (r.cycle_space_dim >= 2)) &&
                        (not_cycle == (r.weak_components == 1)) &&
                        (not_cycle == (r.strong_components == 1));
  return r;
}

ReconstructionReport reconstruct_stats(const NBGraph& nb) {
  ReconstructionReport r;
  r.two_m = nb.size();
  r.m = nb.size() / 2;
  // Count NB vertices by out-degree; out-degree j-1 vertices are the j
  // oriented edges into each degree-j base vertex.
  std::vector<long long> by_outdeg;
  for (int i = 0; i < nb.size(); ++i) {
    int od = static_cast<int>(nb.succ[i].size());
    if (od >= static_cast<int>(by_outdeg.size())) by_outdeg.resize(od + 1, 0);
    ++by_outdeg[od];
  }
  r.consistent = true;
  long long degree_sum = 0;
  for (int od = 0; od < static_cast<int>(by_outdeg.size()); ++od) {
    if (by_outdeg[od] == 0) continue;
    int j = od + 1;  // base degree
    if (by_outdeg[od] % j != 0) {
      r.consistent = false;
      continue;
    }
    long long c = by_outdeg[od] / j;
    r.degree_counts.emplace_back(j, c);
    r.vertex_total += c;
    degree_sum += static_cast<long long>(j) * c;
  }
  if (degree_sum != r.two_m) r.consistent = false;
  return r;
}

namespace {

// Iterated in/out-degree color refinement; returns stable colors.
std::vector<long long> wl_colors(const std::vector<std::vector<int>>& succ) {
  int n = static_cast<int>(succ.size());
  std::vector<std::vector<int>> pred(n);
  for (int i = 0; i < n; ++i)
    for (int j : succ[i]) pred[j].push_back(i);
  std::vector<long long> color(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<long long>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long long> s;
      s.push_back(color[v]);
      std::vector<long long> outc, inc;
      for (int w : succ[v]) outc.push_back(color[w]);
      for (int w : pred[v]) inc.push_back(color[w]);
      std::sort(outc.begin(), outc.end());
      std::sort(inc.begin(), inc.end());
      s.push_back(-1);
      s.insert(s.end(), outc.begin(), outc.end());
      s.push_back(-2);
      s.insert(s.end(), inc.begin(), inc.end());
      sig[v] = {std::move(s), v};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<long long> next(n);
    long long c = 0;
    for (int k = 0; k < n; ++k) {
      if (k > 0 && sorted[k].first != sorted[k - 1].first) ++c;
      next[sorted[k].second] = c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

}  // namespace

bool digraph_isomorphic(const std::vector<std::vector<int>>& succ_a,
                        const std::vector<std::vector<int>>& succ_b) {
  int n = static_cast<int>(succ_a.size());
  if (n != static_cast<int>(succ_b.size())) return false;
  if (n == 0) return true;
  long long arcs_a = 0, arcs_b = 0;
  for (const auto& l : succ_a) arcs_a += static_cast<long long>(l.size());
  for (const auto& l : succ_b) arcs_b += static_cast<long long>(l.size());
  if (arcs_a != arcs_b) return false;

  auto ca = wl_colors(succ_a), cb = wl_colors(succ_b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  std::vector<std::vector<char>> aa(n, std::vector<char>(n, 0)), ab(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j : succ_a[i]) aa[i][j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j : succ_b[i]) ab[i][j] = 1;

  // Map rarest colors first.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<long long> color_freq(n, 0);
  {
    std::vector<std::pair<long long, long long>> freq;  // (color, count) via map-like scan
    std::vector<long long> sorted_colors = ca;
    std::sort(sorted_colors.begin(), sorted_colors.end());
    auto count_of = [&](long long c) {
      auto lo = std::lower_bound(sorted_colors.begin(), sorted_colors.end(), c);
      auto hi = std::upper_bound(sorted_colors.begin(), sorted_colors.end(), c);
      return static_cast<long long>(hi - lo);
    };
    for (int v = 0; v < n; ++v) color_freq[v] = count_of(ca[v]);
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (color_freq[x] != color_freq[y]) return color_freq[x] < color_freq[y];
    return ca[x] < ca[y];
  });

  std::vector<int> map_ab(n, -1);
  std::vector<char> used(n, 0);
  auto dfs = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    int v = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used[w] || ca[v] != cb[w]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        int u = order[i];
        if (aa[u][v] != ab[map_ab[u]][w] || aa[v][u] != ab[w][map_ab[u]]) ok = false;
      }
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

IsoCheckReport nb_isomorphism_theorem_check(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.edge_count() == 0 || b.edge_count() == 0)
    throw domain_error("the isomorphism transfer check needs graphs with edges");
  IsoCheckReport r;
  r.base_isomorphic = are_isomorphic(a, b);
  auto nba = build_nb(a), nbb = build_nb(b);
  r.nb_isomorphic = digraph_isomorphic(nba.succ, nbb.succ);
  r.agree = r.base_isomorphic == r.nb_isomorphic;
  return r;
}

BipartiteNBReport bipartite_nb_partition_check(const SimpleGraph& g) {
  if (g.edge_count() == 0) throw domain_error("bipartite partition check needs edges");
  BipartiteNBReport r;
  r.base_bipartite = g.is_bipartite();
  auto nb = build_nb(g);
  auto pr = circular_partite_analysis(g);
  r.nb_two_partite =
      std::find(pr.feasible_k.begin(), pr.feasible_k.end(), 2) != pr.feasible_k.end();
  r.equivalent = r.base_bipartite == r.nb_two_partite;

  r.orientation_classes_alternate = false;
  if (r.base_bipartite) {
    // 2-color the base, class of an oriented edge = color of its input.
    auto adj = g.adjacency_lists();
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
      if (color[s] != -1) continue;
      color[s] = 0;
      std::queue<int> q;
      q.push(s);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
          if (color[w] == -1) {
            color[w] = color[u] ^ 1;
            q.push(w);
          }
      }
    }
    bool ok = true;
    for (int i = 0; i < nb.size() && ok; ++i) {
      int ci = color[nb.verts[i].first];
      for (int j : nb.succ[i])
        if (color[nb.verts[j].first] != (ci ^ 1)) {
          ok = false;
          break;
        }
    }
    r.orientation_classes_alternate = ok;
  }
  return r;
}

}  // namespace nbspectra
