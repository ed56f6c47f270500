#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the refinement engine, the branch-and-bound solvers or the
// distinguishing search; each routine enumerates its search space directly.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak::oracle {

inline std::vector<std::vector<int>> all_automorphisms(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) {
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) ok = false;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  std::vector<int> da(n), db(n);
  for (int v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      if (da[u] != db[p[u]]) ok = false;
      for (int v = u + 1; v < n && ok; ++v) {
        if (a.adjacent(u, v) != b.adjacent(p[u], p[v])) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Shortest simple cycle by DFS over all simple paths from each start vertex.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, int start, int v, int len) -> void {
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (w == start && len >= 3) best = std::min(best, len);
      if (w > start && !used[w] && len + 1 < best) {
        used[w] = true;
        self(self, start, w, len + 1);
        used[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    dfs(dfs, s, s, 1);
    used[s] = false;
  }
  if (best > n) return std::nullopt;
  return best;
}

inline bool dominates(const Graph& g, std::uint64_t s) {
  for (int v = 0; v < g.order(); ++v) {
    if ((s >> v) & 1U) continue;
    if ((g.row(v) & s) == 0) return false;
  }
  return true;
}

inline int domination_number(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const int k = std::popcount(s);
    if (k < best && dominates(g, s)) best = k;
  }
  return best;
}

inline std::vector<std::uint64_t> all_gamma_sets(const Graph& g) {
  const int gamma = oracle::domination_number(g);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (std::popcount(s) == gamma && dominates(g, s)) out.push_back(s);
  }
  return out;
}

inline bool preserves_vertex_colors(const std::vector<int>& perm, const std::vector<int>& c) {
  for (std::size_t x = 0; x < perm.size(); ++x) {
    if (c[perm[x]] != c[x]) return false;
  }
  return true;
}

inline bool is_identity(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i)) return false;
  }
  return true;
}

// Tries every coloring in {0..d-1}^n against every automorphism.
inline int distinguishing_number(const Graph& g) {
  const int n = g.order();
  const auto auts = all_automorphisms(g);
  for (int d = 1;; ++d) {
    std::vector<int> c(n, 0);
    while (true) {
      bool good = true;
      for (const auto& a : auts) {
        if (!is_identity(a) && preserves_vertex_colors(a, c)) {
          good = false;
          break;
        }
      }
      if (good) return d;
      int i = 0;
      while (i < n && ++c[i] == d) c[i++] = 0;
      if (i == n) break;
    }
  }
}

// Edge version: colorings over the edge list, automorphisms acting on
// unordered pairs. Returns nullopt when some non-identity automorphism
// fixes every edge (no edge labeling can be distinguishing).
inline std::optional<int> distinguishing_index(const Graph& g) {
  const auto auts = all_automorphisms(g);
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> actions;
  for (const auto& a : auts) {
    if (is_identity(a)) continue;
    std::vector<int> act(m);
    for (int i = 0; i < m; ++i) {
      int x = a[edges[i].u], y = a[edges[i].v];
      if (x > y) std::swap(x, y);
      for (int j = 0; j < m; ++j) {
        if (edges[j].u == x && edges[j].v == y) act[i] = j;
      }
    }
    if (is_identity(act)) return std::nullopt;
    actions.push_back(act);
  }
  for (int d = 1;; ++d) {
    std::vector<int> c(m, 0);
    while (true) {
      bool good = true;
      for (const auto& act : actions) {
        if (preserves_vertex_colors(act, c)) {
          good = false;
          break;
        }
      }
      if (good) return d;
      int i = 0;
      while (i < m && ++c[i] == d) c[i++] = 0;
      if (i == m) break;
    }
  }
}

inline bool hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[0] != 0) break;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.adjacent(p[i], p[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool traceable(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = g.adjacent(p[i], p[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool connected(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (g.adjacent(v, w) && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

// Every labeled graph on n vertices, indexed by its upper-triangle bitmask.
inline Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

// Isomorphism classes of connected graphs on n vertices by pairwise
// brute-force isomorphism tests (bucketed by degree sequence and size).
inline std::vector<Graph> connected_classes(int n) {
  std::vector<Graph> reps;
  std::vector<std::vector<int>> keys;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = labeled_graph(n, mask);
    if (!connected(g)) continue;
    std::vector<int> key{g.size()};
    for (int v = 0; v < n; ++v) key.push_back(g.degree(v));
    std::sort(key.begin() + 1, key.end());
    bool found = false;
    for (std::size_t i = 0; i < reps.size() && !found; ++i) {
      if (keys[i] == key && oracle::isomorphic(reps[i], g)) found = true;
    }
    if (!found) {
      reps.push_back(g);
      keys.push_back(key);
    }
  }
  return reps;
}

// Burnside count of all graphs on n vertices (up to isomorphism):
// average over S_n of 2^(cycles of the induced action on pairs).
inline std::uint64_t count_all_graphs(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t total = 0;
  std::uint64_t perms = 0;
  do {
    std::set<std::pair<int, int>> seen;
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (seen.count({i, j})) continue;
        ++cycles;
        int a = i, b = j;
        while (!seen.count({std::min(a, b), std::max(a, b)})) {
          seen.insert({std::min(a, b), std::max(a, b)});
          a = p[a];
          b = p[b];
        }
      }
    }
    total += std::uint64_t{1} << cycles;
    ++perms;
  } while (std::next_permutation(p.begin(), p.end()));
  return total / perms;
}

// Connected counts from all-graph counts by inverting the Euler transform.
inline std::vector<std::uint64_t> connected_counts(int n_max) {
  std::vector<long long> a(n_max + 1, 0);
  a[0] = 1;
  for (int n = 1; n <= n_max; ++n) a[n] = static_cast<long long>(count_all_graphs(n));
  // a = EULER(c): n a_n = sum_{k=1}^n b_k a_{n-k}, b_k = sum_{d|k} d c_d.
  std::vector<long long> b(n_max + 1, 0), c(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    long long s = n * a[n];
    for (int k = 1; k < n; ++k) s -= b[k] * a[n - k];
    b[n] = s;
    long long cd = b[n];
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) cd -= d * c[d];
    }
    c[n] = cd / n;
  }
  return {c.begin(), c.end()};
}

// Connected graphs on 1..n_max vertices, one per class, computed once.
inline const std::vector<Graph>& connected_up_to(int n_max) {
  static std::vector<std::vector<Graph>> cache;
  while (static_cast<int>(cache.size()) < n_max) {
    cache.push_back(connected_classes(static_cast<int>(cache.size()) + 1));
  }
  static std::vector<std::vector<Graph>> flat(65);
  auto& out = flat[n_max];
  if (out.empty()) {
    for (int n = 0; n < n_max; ++n) out.insert(out.end(), cache[n].begin(), cache[n].end());
  }
  return out;
}

}  // namespace symbreak::oracle
