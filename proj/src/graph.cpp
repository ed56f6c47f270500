#include "symbreak/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "symbreak/errors.hpp"

namespace symbreak {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  out.reserve(std::popcount(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= bit(v);
  return s;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw ParseError("negative vertex count");
  if (n > kMaxVertices) {
    throw CapabilityError("graphs with more than 64 vertices are not supported (n=" +
                          std::to_string(n) + ")");
  }
  std::vector<VertexSet> rows(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge endpoint out of range: (" + std::to_string(u) + "," +
                       std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    rows[u] |= bit(v);
    rows[v] |= bit(u);
  }
  Graph g;
  g.n_ = n;
  g.rows_ = std::move(rows);
  g.index_edges();
  return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) {
    throw CapabilityError("graphs with more than 64 vertices are not supported");
  }
  for (int u = 0; u < n; ++u) {
    if ((rows[u] >> u) & 1U) throw ParseError("self-loop at vertex " + std::to_string(u));
    if ((rows[u] & ~all_vertices(n)) != 0) throw ParseError("adjacency row out of range");
    for (int v : set_members(rows[u])) {
      if (((rows[v] >> u) & 1U) == 0) throw ParseError("asymmetric adjacency");
    }
  }
  Graph g;
  g.n_ = n;
  g.rows_ = std::move(rows);
  g.index_edges();
  return g;
}

void Graph::index_edges() {
  edges_.clear();
  edge_ids_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int u = 0; u < n_; ++u) {
    VertexSet later = rows_[u] & ~all_vertices(u + 1);
    for (int v : set_members(later)) {
      const auto id = static_cast<std::int16_t>(edges_.size());
      edge_ids_[u * n_ + v] = id;
      edge_ids_[v * n_ + u] = id;
      edges_.push_back({u, v});
    }
  }
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  return edge_ids_[u * n_ + v];
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = all_vertices(g.order());
  while (unseen != 0) {
    VertexSet comp = bit(std::countr_zero(unseen));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (int v : set_members(frontier)) next |= g.row(v);
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() > 0 && components(g).size() == 1;
}

// Shortest cycle through BFS from every root: a non-tree edge (x, y) seen
// from root r closes a cycle of length dist(x) + dist(y) + 1, and the
// minimum over all roots is exact.
Girth girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (int y : set_members(g.row(x))) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best > n) return Girth{};
  return Girth{best};
}

GraphMetrics metrics(const Graph& g) {
  GraphMetrics out;
  out.max_degree = max_degree(g);
  out.min_degree = min_degree(g);
  out.girth = girth(g);
  out.connected = is_connected(g);
  out.forest = out.girth.acyclic();
  out.tree = out.forest && out.connected;
  return out;
}

Neighborhoods neighborhoods(const Graph& g, VertexSet s) {
  Neighborhoods out;
  for (int v : set_members(s)) out.open |= g.row(v);
  out.closed = out.open | s;
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = ~g.row(v) & all_vertices(n) & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph line_graph(const Graph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m == 0) throw DomainError("line graph of an edgeless graph is empty");
  if (m > kMaxVertices) {
    throw CapabilityError("line graph would have " + std::to_string(m) +
                          " vertices (limit 64)");
  }
  std::vector<VertexSet> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int n = na + b.order();
  if (n > kMaxVertices) {
    throw CapabilityError("union would have " + std::to_string(n) + " vertices (limit 64)");
  }
  std::vector<VertexSet> rows(n, 0);
  for (int v = 0; v < na; ++v) rows[v] = a.row(v);
  for (int v = 0; v < b.order(); ++v) rows[na + v] = b.row(v) << na;
  return Graph::from_rows(std::move(rows));
}

Graph join(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int n = na + b.order();
  if (n > kMaxVertices) {
    throw CapabilityError("join would have " + std::to_string(n) + " vertices (limit 64)");
  }
  const VertexSet left = all_vertices(na);
  const VertexSet right = all_vertices(n) & ~left;
  std::vector<VertexSet> rows(n, 0);
  for (int v = 0; v < na; ++v) rows[v] = a.row(v) | right;
  for (int v = 0; v < b.order(); ++v) rows[na + v] = (b.row(v) << na) | left;
  return Graph::from_rows(std::move(rows));
}

VertexDeletion delete_vertices(const Graph& g, VertexSet s) {
  const int n = g.order();
  s &= all_vertices(n);
  if (set_size(s) == n) throw DomainError("cannot delete every vertex");
  VertexDeletion out;
  out.old_to_new.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if ((s >> v) & 1U) continue;
    out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  const int k = static_cast<int>(out.new_to_old.size());
  std::vector<VertexSet> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int u : set_members(g.row(out.new_to_old[i]) & ~s)) rows[i] |= bit(out.old_to_new[u]);
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

Graph relabel(const Graph& g, std::span<const int> image) {
  const int n = g.order();
  std::vector<VertexSet> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : set_members(g.row(u))) rows[image[u]] |= bit(image[v]);
  }
  return Graph::from_rows(std::move(rows));
}

Graph empty_graph(int n) { return Graph::from_rows(std::vector<VertexSet>(n, 0)); }

Graph complete_graph(int n) { return complement(empty_graph(n)); }

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(int p, int q) { return join(empty_graph(p), empty_graph(q)); }

Graph wheel_graph(int rim) { return join(cycle_graph(rim), empty_graph(1)); }

Graph petersen_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.size() << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ' ';
    first = false;
    os << e.u << '-' << e.v;
  }
  os << ']';
  return os.str();
}

}  // namespace symbreak
