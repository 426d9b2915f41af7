#include "nbspectra/cospectral.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>

#include "nbspectra/canonical.hpp"
#include "nbspectra/charpoly.hpp"
#include "nbspectra/errors.hpp"
#include "nbspectra/laplacian.hpp"
#include "nbspectra/nb.hpp"

namespace nbspectra {

OperatorTag parse_operator(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (c == '_') c = '-';
    s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (s == "adjacency" || s == "a" || s == "adj") return OperatorTag::adjacency;
  if (s == "normalized-laplacian" || s == "l" || s == "nl") {
    return OperatorTag::normalized_laplacian;
  }
  if (s == "nb-matrix" || s == "nb-a" || s == "nba") return OperatorTag::nb_matrix;
  if (s == "nb-laplacian" || s == "nb-l" || s == "nbl") return OperatorTag::nb_laplacian;
  throw domain_error("unknown operator '" + name +
                     "' (expected adjacency, normalized-laplacian, nb-matrix or nb-laplacian)");
}

std::string operator_name(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::adjacency: return "adjacency";
    case OperatorTag::normalized_laplacian: return "normalized-laplacian";
    case OperatorTag::nb_matrix: return "nb-matrix";
    case OperatorTag::nb_laplacian: return "nb-laplacian";
  }
  return "?";
}

RationalMatrix operator_matrix(const SimpleGraph& g, OperatorTag tag) {
  switch (tag) {
    case OperatorTag::adjacency: {
      RationalMatrix m(g.n, g.n);
      for (const auto& [u, v] : g.edges) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
      }
      return m;
    }
    case OperatorTag::normalized_laplacian: {
      if (g.min_degree() < 1) {
        throw domain_error("the normalized Laplacian requires minimum degree >= 1");
      }
      const std::vector<int> deg = g.degrees();
      RationalMatrix m = RationalMatrix::identity(g.n);
      for (const auto& [u, v] : g.edges) {
        m.at(u, v) = Rat(-1) / Rat(deg[u]);
        m.at(v, u) = Rat(-1) / Rat(deg[v]);
      }
      return m;
    }
    case OperatorTag::nb_matrix:
      return nb_arc_matrix_transposed(build_nb(g));
    case OperatorTag::nb_laplacian:
      return build_laplacian(g).lap;
  }
  throw domain_error("unknown operator tag");
}

std::string spectral_key(const SimpleGraph& g, OperatorTag tag) {
  return char_poly(operator_matrix(g, tag)).integer_key();
}

namespace {

using U128 = unsigned __int128;

void append_hex_u128(std::string& out, U128 v) {
  static const char* digits = "0123456789abcdef";
  char buf[32];
  for (int i = 31; i >= 0; --i) {
    buf[i] = digits[static_cast<unsigned>(v & 0xF)];
    v >>= 4;
  }
  out.append(buf, 32);
}

// Exact integer spectral prefilter: traces of M^k for k = 1..14, where M is
// the NB arc matrix (scaled_walk == false) or 420 * D^-1 A (scaled_walk ==
// true; 420 = lcm(1..7) clears every denominator for degrees up to 8, and
// 420^14 still fits in 128 bits because the walk matrix is row-stochastic).
// Equal spectra imply equal traces, so grouping by this signature never
// separates a genuinely cospectral pair.
std::string nb_trace_signature(const NBGraph& nb, bool scaled_walk) {
  const int sz = nb.size();
  constexpr int kPowers = 14;
  constexpr long long kScale = 420;

  std::vector<U128> row_scale(sz, 1);
  if (scaled_walk) {
    for (int i = 0; i < sz; ++i) {
      if (nb.out_weight[i] <= 0) {
        throw domain_error("walk trace signature requires minimum degree >= 2");
      }
      if (kScale % nb.out_weight[i] != 0) {
        throw capability_error("trace signature supports degrees up to 8 only");
      }
      row_scale[i] = static_cast<U128>(kScale / nb.out_weight[i]);
    }
  }

  std::vector<U128> power(static_cast<std::size_t>(sz) * sz, 0);
  std::vector<U128> next(static_cast<std::size_t>(sz) * sz);
  for (int i = 0; i < sz; ++i) {
    for (int j : nb.succ[i]) power[static_cast<std::size_t>(i) * sz + j] = row_scale[i];
  }

  std::string sig = std::to_string(sz);
  sig += scaled_walk ? 'w' : 'b';
  for (int k = 1; k <= kPowers; ++k) {
    U128 trace = 0;
    for (int i = 0; i < sz; ++i) trace += power[static_cast<std::size_t>(i) * sz + i];
    append_hex_u128(sig, trace);
    if (k == kPowers) break;
    std::fill(next.begin(), next.end(), U128{0});
    for (int i = 0; i < sz; ++i) {
      const U128* row = &power[static_cast<std::size_t>(i) * sz];
      U128* out = &next[static_cast<std::size_t>(i) * sz];
      for (int j = 0; j < sz; ++j) {
        const U128 v = row[j];
        if (v == 0) continue;
        const U128 s = row_scale[j];
        for (int l : nb.succ[j]) out[l] += v * s;
      }
    }
    power.swap(next);
  }
  return sig;
}

// Runs fn(0..count-1) on up to `threads` workers; rethrows the first failure.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> cursor{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&]() {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct GraphEntry {
  SimpleGraph g;
  std::string g6;
  std::string key[2];  // exact keys: adjacency, normalized Laplacian
  std::string sig[2];  // trace signatures: nb matrix, nb Laplacian
};

// Groups indices by a string selector; counts members of nontrivial groups
// and records every unordered pair inside each group.
long long collide_exact(const std::vector<GraphEntry>& entries,
                        const std::vector<int>& subset,
                        const std::function<const std::string&(int)>& key_of,
                        std::vector<WitnessPair>& pairs) {
  std::map<std::string, std::vector<int>> groups;
  for (int i : subset) groups[key_of(i)].push_back(i);
  long long count = 0;
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    count += static_cast<long long>(members.size());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        pairs.push_back({entries[members[a]].g6, entries[members[b]].g6});
      }
    }
  }
  return count;
}

// NB operators: trace signatures narrow the field, exact keys decide.
long long collide_nb(const std::vector<GraphEntry>& entries, int sig_index,
                     OperatorTag tag, int threads, std::vector<WitnessPair>& pairs) {
  std::map<std::string, std::vector<int>> groups;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    groups[entries[i].sig[sig_index]].push_back(static_cast<int>(i));
  }
  std::vector<int> candidates;
  for (const auto& [sig, members] : groups) {
    if (members.size() >= 2) {
      candidates.insert(candidates.end(), members.begin(), members.end());
    }
  }
  std::vector<std::string> exact_keys(entries.size());
  parallel_for(static_cast<int>(candidates.size()), threads, [&](int t) {
    const int i = candidates[static_cast<std::size_t>(t)];
    exact_keys[i] = spectral_key(entries[i].g, tag);
  });
  return collide_exact(
      entries, candidates, [&](int i) -> const std::string& { return exact_keys[i]; }, pairs);
}

}  // namespace

ScanResult cospectral_scan(int n_max, int min_degree, bool allow_n8, int threads) {
  if (n_max > 8) {
    throw capability_error("the cospectrality scan is limited to n <= 8");
  }
  if (n_max < 3) throw domain_error("the cospectrality scan requires n_max >= 3");
  if (min_degree < 2) {
    throw domain_error("the cospectrality scan requires min_degree >= 2 (the NB Laplacian "
                       "operator is undefined below that)");
  }
  if (n_max == 8 && !allow_n8) {
    throw capability_error("the n = 8 scan takes minutes and must be enabled explicitly");
  }
  if (threads < 1) threads = 1;

  ScanResult result;
  result.n_max = n_max;
  result.min_degree = min_degree;
  ScanRow aggregate;
  aggregate.label = "4-6";
  for (int n = 3; n <= n_max; ++n) {
    const std::vector<SimpleGraph> graphs = enumerate_graphs_exact_n(n, min_degree, allow_n8);
    std::vector<GraphEntry> entries(graphs.size());
    std::atomic<int> done{0};
    parallel_for(static_cast<int>(graphs.size()), threads, [&](int i) {
      GraphEntry& e = entries[static_cast<std::size_t>(i)];
      e.g = graphs[static_cast<std::size_t>(i)];
      e.g6 = to_graph6(e.g);
      e.key[0] = spectral_key(e.g, OperatorTag::adjacency);
      e.key[1] = spectral_key(e.g, OperatorTag::normalized_laplacian);
      const NBGraph nb = build_nb(e.g);
      e.sig[0] = nb_trace_signature(nb, false);
      e.sig[1] = nb_trace_signature(nb, true);
      const int d = done.fetch_add(1) + 1;
      if (n == 8 && d % 500 == 0) {
        std::fprintf(stderr, "scan n=8: %d/%zu signatures\n", d, graphs.size());
      }
    });

    std::vector<int> all(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) all[i] = static_cast<int>(i);

    ScanRow row;
    row.label = std::to_string(n);
    row.graphs = static_cast<long long>(entries.size());
    auto& wit = result.witnesses[n];
    row.in_class[0] = collide_exact(
        entries, all, [&](int i) -> const std::string& { return entries[i].key[0]; }, wit[0]);
    row.in_class[1] = collide_exact(
        entries, all, [&](int i) -> const std::string& { return entries[i].key[1]; }, wit[1]);
    row.in_class[2] = collide_nb(entries, 0, OperatorTag::nb_matrix, threads, wit[2]);
    row.in_class[3] = collide_nb(entries, 1, OperatorTag::nb_laplacian, threads, wit[3]);
    result.rows.push_back(row);

    if (n >= 4 && n <= 6) {
      aggregate.graphs += row.graphs;
      for (int op = 0; op < kOperatorCount; ++op) aggregate.in_class[op] += row.in_class[op];
    }
  }

  if (n_max >= 6) {
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      if (result.rows[i].label == "6") {
        result.rows.insert(result.rows.begin() + static_cast<std::ptrdiff_t>(i) + 1, aggregate);
        break;
      }
    }
  }
  return result;
}

std::string scan_csv(const ScanResult& result) {
  std::string out = "n,graphs,A,L,NB_A,NB_L\n";
  for (const ScanRow& row : result.rows) {
    out += row.label;
    out += ',' + std::to_string(row.graphs);
    for (int op = 0; op < kOperatorCount; ++op) {
      out += ',' + std::to_string(row.in_class[op]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace nbspectra
