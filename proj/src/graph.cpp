#include "nbspectra/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace nbspectra {

SimpleGraph SimpleGraph::from_edges(int n, std::vector<std::pair<int, int>> e) {
  if (n < 0) throw domain_error("vertex count must be non-negative");
  for (auto& [u, v] : e) {
    if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      throw domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") out of range for n=" + std::to_string(n));
  }
  std::sort(e.begin(), e.end());
  if (std::adjacent_find(e.begin(), e.end()) != e.end())
    throw domain_error("duplicate edge in edge list");
  SimpleGraph g;
  g.n = n;
  g.edges = std::move(e);
  return g;
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(n, 0);
  for (auto [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

int SimpleGraph::min_degree() const {
  if (n == 0) return 0;
  auto d = degrees();
  return *std::min_element(d.begin(), d.end());
}

int SimpleGraph::max_degree() const {
  if (n == 0) return 0;
  auto d = degrees();
  return *std::max_element(d.begin(), d.end());
}

std::vector<std::vector<int>> SimpleGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

int SimpleGraph::component_count() const {
  auto adj = adjacency_lists();
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
  }
  return comps;
}

bool SimpleGraph::is_bipartite() const {
  auto adj = adjacency_lists();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (color[w] == -1) {
          color[w] = color[u] ^ 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool SimpleGraph::is_cycle_graph() const {
  if (n < 3 || !is_connected()) return false;
  auto d = degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
}

bool SimpleGraph::has_cycle_component() const {
  auto adj = adjacency_lists();
  auto d = degrees();
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    if (comp.size() >= 3 &&
        std::all_of(comp.begin(), comp.end(), [&](int v) { return d[v] == 2; }))
      return true;
  }
  return false;
}

int SimpleGraph::cycle_space_dimension() const {
  return edge_count() - n + component_count();
}

// --- graph6 ------------------------------------------------------------------

SimpleGraph parse_graph6(const std::string& line) {
  // Strip optional ">>graph6<<" header and trailing whitespace.
  std::size_t start = 0;
  const std::string header = ">>graph6<<";
  if (line.rfind(header, 0) == 0) start = header.size();
  std::size_t end = line.size();
  while (end > start && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  if (end == start) throw parse_error("empty graph6 string", start);

  auto byte_at = [&](std::size_t pos) -> int {
    if (pos >= end) throw parse_error("truncated graph6 string", pos);
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw parse_error("invalid graph6 byte", pos);
    return c - 63;
  };

  std::size_t pos = start;
  int n;
  int first = byte_at(pos);
  if (first < 63) {
    n = first;
    ++pos;
  } else {
    throw parse_error("graph6 vertex counts above 62 are not supported", pos);
  }

  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (end - pos != nbytes)
    throw parse_error("graph6 body has wrong length (expected " +
                          std::to_string(nbytes) + " bytes)",
                      pos);

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int b = byte_at(pos + static_cast<std::size_t>(bit / 6));
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits past the triangle must be zero.
  for (long long pb = nbits; pb < static_cast<long long>(nbytes) * 6; ++pb) {
    int b = byte_at(pos + static_cast<std::size_t>(pb / 6));
    if ((b >> (5 - pb % 6)) & 1) throw parse_error("nonzero graph6 padding bit", pos + pb / 6);
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

std::string to_graph6(const SimpleGraph& g) {
  if (g.n > 62) throw capability_error("graph6 serialization supports n <= 62");
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  long long nbits = static_cast<long long>(g.n) * (g.n - 1) / 2;
  std::vector<unsigned char> bytes(static_cast<std::size_t>((nbits + 5) / 6), 0);
  long long bit = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.has_edge(i, j)) bytes[static_cast<std::size_t>(bit / 6)] |= 1u << (5 - bit % 6);
  for (unsigned char b : bytes) out.push_back(static_cast<char>(b + 63));
  return out;
}

// --- edge list ---------------------------------------------------------------

SimpleGraph parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  long long n_override = -1;
  std::size_t i = 0;
  const std::size_t len = text.size();
  long long max_v = -1;

  auto skip_space_and_comments = [&]() {
    while (i < len) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      } else if (text[i] == '#') {
        while (i < len && text[i] != '\n') ++i;
      } else {
        break;
      }
    }
  };
  auto read_int = [&](const char* what) -> long long {
    skip_space_and_comments();
    if (i >= len) throw parse_error(std::string("expected ") + what, i);
    std::size_t tok_start = i;
    bool neg = text[i] == '-';
    if (neg) ++i;
    if (i >= len || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error(std::string("expected ") + what, tok_start);
    long long v = 0;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw parse_error("vertex index too large", tok_start);
      ++i;
    }
    return neg ? -v : v;
  };

  while (true) {
    skip_space_and_comments();
    if (i >= len) break;
    if (text[i] == 'n' || text[i] == 'N') {
      std::size_t at = i;
      ++i;
      long long v = read_int("vertex count after 'n'");
      if (v < 0) throw parse_error("negative vertex count", at);
      n_override = v;
      continue;
    }
    std::size_t at = i;
    long long u = read_int("vertex index");
    long long v = read_int("second endpoint of edge");
    if (u < 0 || v < 0) throw parse_error("negative vertex index", at);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_v = std::max({max_v, u, v});
  }
  long long n = n_override >= 0 ? n_override : max_v + 1;
  return SimpleGraph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << "n " << g.n << "\n";
  for (auto [u, v] : g.edges) os << u << " " << v << "\n";
  return os.str();
}

// --- JSON --------------------------------------------------------------------

SimpleGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("bad JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw parse_error("graph JSON must be an object with \"n\" and \"edges\"", 0);
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw parse_error("each edge must be a two-element array", 0);
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

std::string graph_to_json(const SimpleGraph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto arr = nlohmann::json::array();
  for (auto [u, v] : g.edges) arr.push_back({u, v});
  j["edges"] = std::move(arr);
  return j.dump();
}

SimpleGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto ends_with = [&](const char* suf) {
    std::string s(suf);
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".g6")) {
    // First non-empty line.
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
      if (!line.empty()) return parse_graph6(line);
    throw parse_error("no graph6 line found", 0);
  }
  if (ends_with(".json")) return graph_from_json(text);
  return parse_edge_list(text);
}

// --- generators --------------------------------------------------------------

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw domain_error("cycle graph needs n >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return SimpleGraph::from_edges(n, std::move(e));
}

SimpleGraph complete_graph(int n) {
  if (n < 2) throw domain_error("complete graph needs n >= 2");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return SimpleGraph::from_edges(n, std::move(e));
}

SimpleGraph path_graph(int m) {
  if (m < 1) throw domain_error("path graph needs at least one edge");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i) e.emplace_back(i, i + 1);
  return SimpleGraph::from_edges(m + 1, std::move(e));
}

SimpleGraph petal_graph(int p, int k) {
  if (p < 1 || k < 3) throw domain_error("petal graph needs p >= 1 petals of length k >= 3");
  std::vector<std::pair<int, int>> e;
  int n = 1 + p * (k - 1);
  for (int i = 0; i < p; ++i) {
    int base = 1 + i * (k - 1);
    e.emplace_back(0, base);
    for (int j = 0; j + 1 < k - 1; ++j) e.emplace_back(base + j, base + j + 1);
    e.emplace_back(base + k - 2, 0);
  }
  return SimpleGraph::from_edges(n, std::move(e));
}

SimpleGraph wheel_graph(int n) {
  if (n < 4) throw domain_error("wheel graph needs n >= 4");
  std::vector<std::pair<int, int>> e;
  int rim = n - 1;
  for (int i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % rim + 1);
  }
  return SimpleGraph::from_edges(n, std::move(e));
}

SimpleGraph star_graph(int leaves) {
  if (leaves < 1) throw domain_error("star graph needs at least one leaf");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return SimpleGraph::from_edges(leaves + 1, std::move(e));
}

SimpleGraph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw domain_error("complete bipartite graph needs both sides non-empty");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return SimpleGraph::from_edges(a + b, std::move(e));
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<std::pair<int, int>> e = a.edges;
  for (auto [u, v] : b.edges) e.emplace_back(u + a.n, v + a.n);
  return SimpleGraph::from_edges(a.n + b.n, std::move(e));
}

SimpleGraph parse_generator_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<int> args;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        args.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw domain_error("bad generator argument '" + tok + "' in '" + spec + "'");
      }
    }
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw domain_error("generator '" + name + "' expects " + std::to_string(k) +
                         " argument(s)");
  };
  if (name == "cycle") {
    need(1);
    return cycle_graph(args[0]);
  }
  if (name == "complete") {
    need(1);
    return complete_graph(args[0]);
  }
  if (name == "path") {
    need(1);
    return path_graph(args[0]);
  }
  if (name == "petal") {
    need(2);
    return petal_graph(args[0], args[1]);
  }
  if (name == "wheel") {
    need(1);
    return wheel_graph(args[0]);
  }
  if (name == "star") {
    need(1);
    return star_graph(args[0]);
  }
  if (name == "kbipartite") {
    need(2);
    return complete_bipartite_graph(args[0], args[1]);
  }
  throw domain_error("unknown generator '" + name +
                     "' (expected cycle, complete, path, petal, wheel, star, kbipartite)");
}

SimpleGraph line_graph(const SimpleGraph& g) {
  int m = g.edge_count();
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = g.edges[i];
      auto [c, d] = g.edges[j];
      if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
    }
  return SimpleGraph::from_edges(m, std::move(e));
}

}  // namespace nbspectra
