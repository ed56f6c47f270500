#pragma once

#include <bit>
#include <compare>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symbreak {

inline constexpr int kMaxVertices = 64;

// Vertex subsets are bitmasks: bit v set iff v is a member.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int set_size(VertexSet s) { return std::popcount(s); }
std::vector<int> set_members(VertexSet s);
VertexSet make_set(std::span<const int> vertices);
inline VertexSet make_set(std::initializer_list<int> vertices) {
  return make_set(std::span<const int>(vertices.begin(), vertices.size()));
}

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1 with n <= 64.
// edges() is the canonical edge numbering: every edge once, as (u, v) with
// u < v, in lexicographic order. Line graphs, edge labelings and induced
// edge actions all index edges through it.
class Graph {
 public:
  Graph() = default;

  // Duplicate pairs (in either orientation) collapse to one edge.
  // Throws ParseError on out-of-range endpoints or self-loops and
  // CapabilityError when n > 64.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  VertexSet row(int v) const { return rows_[v]; }
  const std::vector<VertexSet>& rows() const { return rows_; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(rows_[v]); }

  const std::vector<Edge>& edges() const { return edges_; }
  // Position of {u, v} in edges(), or -1 when u and v are not adjacent.
  int edge_id(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void index_edges();

  int n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<Edge> edges_;
  std::vector<std::int16_t> edge_ids_;  // n*n lookup
};

struct Girth {
  // Empty when the graph is acyclic.
  std::optional<int> length;
  bool acyclic() const { return !length.has_value(); }
  bool at_least(int g) const { return length && *length >= g; }
};

struct GraphMetrics {
  int max_degree = 0;
  int min_degree = 0;
  Girth girth;
  bool connected = false;
  bool forest = false;
  bool tree = false;
};

GraphMetrics metrics(const Graph& g);
Girth girth(const Graph& g);
bool is_connected(const Graph& g);
// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

struct Neighborhoods {
  VertexSet open = 0;
  VertexSet closed = 0;
};
Neighborhoods neighborhoods(const Graph& g, VertexSet s);
inline VertexSet closed_neighborhood(const Graph& g, int v) {
  return g.row(v) | bit(v);
}

Graph complement(const Graph& g);
// Vertex i of the result is g.edges()[i]. Throws DomainError when g has no
// edges.
Graph line_graph(const Graph& g);
// All vertices of a, then all of b shifted by a.order(), plus every cross
// edge.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};
// Induced subgraph on V \ s with order-preserving renumbering. Throws
// DomainError when s covers every vertex.
VertexDeletion delete_vertices(const Graph& g, VertexSet s);
Graph relabel(const Graph& g, std::span<const int> image);

// Named families.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int p, int q);
Graph wheel_graph(int rim);
Graph petersen_graph();

std::string describe(const Graph& g);

}  // namespace symbreak
