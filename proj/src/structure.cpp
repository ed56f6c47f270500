#include "symbreak/structure.hpp"

#include <string>

#include "symbreak/errors.hpp"

namespace symbreak {
namespace {

// Simple-path search that extends from `end`. When `close_to` >= 0 the path
// must finish adjacent to it (a Hamiltonian cycle).
class PathSearch {
 public:
  PathSearch(const Graph& g, std::uint64_t budget)
      : g_(g), all_(all_vertices(g.order())), budget_(budget) {}

  bool extend(int end, VertexSet visited, int close_to) {
    if (++nodes_ > budget_) {
      throw CapabilityError("Hamiltonicity search exceeded the node budget of " +
                            std::to_string(budget_));
    }
    if (visited == all_) return close_to < 0 || g_.adjacent(end, close_to);
    const VertexSet unvisited = all_ & ~visited;

    // The unvisited part must stay reachable from the current end.
    VertexSet reach = g_.row(end) & unvisited;
    if (reach == 0) return false;
    VertexSet frontier = reach;
    while (frontier != 0) {
      VertexSet next = 0;
      for (int v : set_members(frontier)) next |= g_.row(v) & unvisited;
      next &= ~reach;
      reach |= next;
      frontier = next;
    }
    if (reach != unvisited) return false;

    // An unvisited vertex other than the eventual last one needs two free
    // neighbors among unvisited vertices, the current end and the cycle
    // start. More than one (two for paths) low-degree vertex is fatal.
    const VertexSet open = unvisited | bit(end) | (close_to >= 0 ? bit(close_to) : 0);
    int deficient = 0;
    for (int v : set_members(unvisited)) {
      const int free = std::popcount(g_.row(v) & open);
      if (free == 0) return false;
      if (free == 1 && ++deficient > (close_to >= 0 ? 0 : 1)) return false;
    }

    for (int w : set_members(g_.row(end) & unvisited)) {
      if (extend(w, visited | bit(w), close_to)) return true;
    }
    return false;
  }

 private:
  const Graph& g_;
  VertexSet all_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_hamiltonian(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n < 3) return false;
  if (min_degree(g) < 2) return false;
  PathSearch search(g, budget);
  return search.extend(0, bit(0), 0);
}

bool is_traceable(const Graph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n == 1) return true;
  if (!is_connected(g)) return false;
  PathSearch search(g, budget);
  // A Hamiltonian path starts at a degree-1 vertex when one exists.
  VertexSet starts = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) starts |= bit(v);
  }
  if (set_size(starts) > 2) return false;
  if (starts == 0) starts = all_vertices(n);
  for (int v : set_members(starts)) {
    if (search.extend(v, bit(v), -1)) return true;
  }
  return false;
}

bool is_claw_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const auto nbrs = set_members(g.row(v));
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (g.adjacent(nbrs[a], nbrs[b])) continue;
        for (std::size_t c = b + 1; c < nbrs.size(); ++c) {
          if (!g.adjacent(nbrs[a], nbrs[c]) && !g.adjacent(nbrs[b], nbrs[c])) return false;
        }
      }
    }
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  const Girth gir = girth(g);
  return !gir.length || *gir.length != 3;
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.size() != n - 1) return false;
  return max_degree(g) == n - 1;
}

bool is_cycle(const Graph& g) {
  const int n = g.order();
  return n >= 3 && g.size() == n && max_degree(g) == 2 && min_degree(g) == 2 && is_connected(g);
}

bool is_path(const Graph& g) {
  const int n = g.order();
  if (n == 1) return true;
  return g.size() == n - 1 && max_degree(g) <= 2 && is_connected(g);
}

bool is_balanced_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n < 2 || n % 2 != 0 || g.size() != (n / 2) * (n / 2)) return false;
  // Both sides are independent and fully joined: the side of vertex 0 is
  // the complement of its neighborhood.
  const VertexSet side = all_vertices(n) & ~g.row(0);
  if (set_size(side) != n / 2) return false;
  const VertexSet other = g.row(0);
  for (int v = 0; v < n; ++v) {
    const VertexSet expected = ((side >> v) & 1U) ? other : side;
    if (g.row(v) != expected) return false;
  }
  return true;
}

bool has_k2_component(const Graph& g) {
  for (VertexSet comp : components(g)) {
    if (set_size(comp) == 2) return true;
  }
  return false;
}

StructureFlags classify_special(const Graph& g, std::uint64_t budget) {
  StructureFlags flags;
  flags.hamiltonian = is_hamiltonian(g, budget);
  flags.traceable = flags.hamiltonian || is_traceable(g, budget);
  flags.claw_free = is_claw_free(g);
  flags.triangle_free = is_triangle_free(g);
  flags.is_star = is_star(g);
  flags.is_tree = is_connected(g) && g.size() == g.order() - 1;
  flags.is_complete = is_complete(g);
  flags.is_complete_bipartite_balanced = is_balanced_complete_bipartite(g);
  flags.is_cycle = is_cycle(g);
  flags.is_path = is_path(g);
  return flags;
}

}  // namespace symbreak
