#include "symbreak/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak {

Permutation::Permutation(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  if (n > 256) throw CapabilityError("permutation degree above 256");
  std::vector<bool> seen(n, false);
  image_.reserve(n);
  for (int x : image) {
    if (x < 0 || x >= n || seen[x]) throw DomainError("image is not a bijection");
    seen[x] = true;
    image_.push_back(static_cast<std::uint8_t>(x));
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(image);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

VertexSet Permutation::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < image_.size() && i < 64; ++i) {
    if (image_[i] != i) s |= bit(static_cast<int>(i));
  }
  return s;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw DomainError("composing permutations of different degree");
  Permutation out;
  out.image_.resize(q.image_.size());
  for (std::size_t i = 0; i < q.image_.size(); ++i) out.image_[i] = p.image_[q.image_[i]];
  return out;
}

const std::vector<Permutation>& PermutationGroup::elements() const {
  if (!enumerated_) {
    throw CapabilityError("group of order " + to_string(order_) +
                          " exceeds the element enumeration cap");
  }
  return elements_;
}

std::vector<VertexSet> PermutationGroup::orbits() const {
  std::map<int, VertexSet> by_rep;
  for (int v = 0; v < degree_; ++v) by_rep[orbit_of_[v]] |= bit(v);
  std::vector<VertexSet> out;
  for (const auto& [rep, set] : by_rep) out.push_back(set);
  return out;
}

std::string to_string(const GroupOrder& order) { return order.str(); }

namespace {

// Adjacency split into layers, one per edge color; a plain graph has one.
struct LayeredGraph {
  int n = 0;
  std::vector<std::vector<VertexSet>> layers;
};

LayeredGraph single_layer(const Graph& g) { return {g.order(), {g.rows()}}; }

LayeredGraph edge_colored_layers(const Graph& g, std::span<const int> edge_colors) {
  if (static_cast<int>(edge_colors.size()) != g.size()) {
    throw DomainError("edge coloring length does not match edge count");
  }
  std::map<int, std::size_t> layer_of;
  for (int c : edge_colors) layer_of.emplace(c, 0);
  std::size_t next = 0;
  for (auto& [c, idx] : layer_of) idx = next++;
  LayeredGraph out{g.order(), std::vector<std::vector<VertexSet>>(
                                  layer_of.size(), std::vector<VertexSet>(g.order(), 0))};
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    auto& rows = out.layers[layer_of[edge_colors[i]]];
    rows[e.u] |= bit(e.v);
    rows[e.v] |= bit(e.u);
  }
  return out;
}

// Ordered partition of the vertices into contiguous cells of lab.
struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> cell_end;  // valid at cell start positions
  std::vector<VertexSet> cell_mask;
  std::vector<int> start_of;  // vertex -> start position of its cell
  int cells = 0;

  bool discrete() const { return cells == static_cast<int>(lab.size()); }
};

Partition initial_partition(int n, std::span<const int> colors) {
  Partition p;
  p.lab.resize(n);
  std::iota(p.lab.begin(), p.lab.end(), 0);
  std::stable_sort(p.lab.begin(), p.lab.end(),
                   [&](int a, int b) { return colors[a] < colors[b]; });
  p.cell_end.assign(n, 0);
  p.cell_mask.assign(n, 0);
  p.start_of.assign(n, 0);
  int s = 0;
  while (s < n) {
    int e = s;
    while (e < n && colors[p.lab[e]] == colors[p.lab[s]]) ++e;
    p.cell_end[s] = e;
    for (int i = s; i < e; ++i) {
      p.cell_mask[s] |= bit(p.lab[i]);
      p.start_of[p.lab[i]] = s;
    }
    ++p.cells;
    s = e;
  }
  return p;
}

// Equitable refinement driven by a FIFO of splitter cells. Cells split by
// neighbor count into W per layer, fragments ordered by count; every step
// depends only on cell positions and counts, so the result is invariant
// under relabeling.
void refine(Partition& p, const LayeredGraph& g, std::deque<int> queue) {
  const int n = g.n;
  std::vector<char> queued(n, 0);
  for (int s : queue) queued[s] = 1;
  std::vector<std::pair<int, int>> keyed;
  keyed.reserve(n);
  while (!queue.empty() && !p.discrete()) {
    const int w = queue.front();
    queue.pop_front();
    queued[w] = 0;
    const VertexSet wmask = p.cell_mask[w];
    for (const auto& rows : g.layers) {
      for (int s = 0; s < n;) {
        const int e = p.cell_end[s];
        if (e - s == 1) {
          s = e;
          continue;
        }
        keyed.clear();
        bool uniform = true;
        for (int i = s; i < e; ++i) {
          const int v = p.lab[i];
          keyed.emplace_back(std::popcount(rows[v] & wmask), v);
          if (keyed.back().first != keyed.front().first) uniform = false;
        }
        if (uniform) {
          s = e;
          continue;
        }
        std::sort(keyed.begin(), keyed.end());
        const bool was_queued = queued[s] != 0;
        int r = s;
        int runs = 0;
        for (int i = 0; i < e - s;) {
          int j = i;
          VertexSet mask = 0;
          while (j < e - s && keyed[j].first == keyed[i].first) {
            p.lab[s + j] = keyed[j].second;
            p.start_of[keyed[j].second] = r;
            mask |= bit(keyed[j].second);
            ++j;
          }
          p.cell_end[r] = s + j;
          p.cell_mask[r] = mask;
          if (!(r == s && was_queued)) {
            queue.push_back(r);
            queued[r] = 1;
          }
          r = s + j;
          i = j;
          ++runs;
        }
        p.cells += runs - 1;
        s = e;
      }
    }
  }
}

void individualize(Partition& p, int v) {
  const int s = p.start_of[v];
  const int e = p.cell_end[s];
  auto it = std::find(p.lab.begin() + s, p.lab.begin() + e, v);
  std::iter_swap(p.lab.begin() + s, it);
  p.cell_end[s] = s + 1;
  p.cell_mask[s] = bit(v);
  p.cell_end[s + 1] = e;
  p.cell_mask[s + 1] = 0;
  for (int i = s + 1; i < e; ++i) {
    p.start_of[p.lab[i]] = s + 1;
    p.cell_mask[s + 1] |= bit(p.lab[i]);
  }
  ++p.cells;
}

int target_cell(const Partition& p) {
  int best = -1;
  int best_len = 0;
  const int n = static_cast<int>(p.lab.size());
  for (int s = 0; s < n; s = p.cell_end[s]) {
    const int len = p.cell_end[s] - s;
    if (len > 1 && (best < 0 || len < best_len)) {
      best = s;
      best_len = len;
    }
  }
  return best;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent[a] = b;
  }
  std::vector<int> parent;
};

bool fixes_pointwise(const Permutation& g, std::span<const int> points) {
  return std::all_of(points.begin(), points.end(), [&](int x) { return g[x] == x; });
}

class SearchTree {
 public:
  SearchTree(const LayeredGraph& g, std::span<const int> colors, bool canonical, bool stop_early)
      : g_(g), colors_(colors.begin(), colors.end()), canonical_(canonical),
        stop_early_(stop_early) {}

  void run() {
    Partition p = initial_partition(g_.n, colors_);
    std::deque<int> queue;
    for (int s = 0; s < g_.n; s = p.cell_end[s]) queue.push_back(s);
    refine(p, g_, std::move(queue));
    std::vector<int> path;
    explore(p, path);
  }

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<int>& first_path() const { return first_path_; }
  const std::vector<int>& best_lab() const { return best_lab_; }

 private:
  using Code = std::vector<VertexSet>;

  Code leaf_code(const std::vector<int>& lab) const {
    const int n = g_.n;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[lab[i]] = i;
    Code code;
    code.reserve(g_.layers.size() * n);
    for (const auto& rows : g_.layers) {
      for (int i = 0; i < n; ++i) {
        VertexSet r = 0;
        for (int u : set_members(rows[lab[i]])) r |= bit(pos[u]);
        code.push_back(r);
      }
    }
    return code;
  }

  // sigma(from[i]) = to[i]
  void add_automorphism(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> image(g_.n);
    for (int i = 0; i < g_.n; ++i) image[from[i]] = to[i];
    generators_.emplace_back(image);
    if (stop_early_) done_ = true;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int k = 0;
    while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) ++k;
    return k;
  }

  // Returns the depth whose child loop should continue: depth - 1 on normal
  // completion, something shallower to abandon subtrees equivalent to ones
  // already explored, -1 to unwind entirely.
  int explore(Partition& p, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    if (p.discrete()) return visit_leaf(p, path);

    const int s = target_cell(p);
    std::vector<int> children;
    for (int i = s; i < p.cell_end[s]; ++i) children.push_back(p.lab[i]);
    std::sort(children.begin(), children.end());

    std::vector<int> explored;
    std::size_t gens_seen = 0;
    UnionFind orbits(g_.n);
    for (int v : children) {
      if (!explored.empty()) {
        for (; gens_seen < generators_.size(); ++gens_seen) {
          const Permutation& gen = generators_[gens_seen];
          if (!fixes_pointwise(gen, path)) continue;
          for (int x = 0; x < g_.n; ++x) orbits.unite(x, gen[x]);
        }
        const int rv = orbits.find(v);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int u) { return orbits.find(u) == rv; })) {
          continue;
        }
      }
      explored.push_back(v);
      Partition child = p;
      individualize(child, v);
      refine(child, g_, std::deque<int>{child.start_of[v]});
      path.push_back(v);
      const int resume = explore(child, path);
      path.pop_back();
      if (done_) return -1;
      if (resume < depth) return resume;
    }
    return depth - 1;
  }

  int visit_leaf(const Partition& p, const std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    Code code = leaf_code(p.lab);
    if (first_lab_.empty()) {
      first_lab_ = p.lab;
      first_path_ = path;
      first_code_ = code;
      best_lab_ = p.lab;
      best_path_ = path;
      best_code_ = std::move(code);
      return depth - 1;
    }
    if (code == first_code_) {
      add_automorphism(first_lab_, p.lab);
      return common_prefix(path, first_path_);
    }
    if (!canonical_) return depth - 1;
    if (code == best_code_) {
      add_automorphism(best_lab_, p.lab);
      return common_prefix(path, best_path_);
    }
    if (code < best_code_) {
      best_lab_ = p.lab;
      best_path_ = path;
      best_code_ = std::move(code);
    }
    return depth - 1;
  }

  const LayeredGraph& g_;
  std::vector<int> colors_;
  bool canonical_;
  bool stop_early_;
  bool done_ = false;

  std::vector<Permutation> generators_;
  std::vector<int> first_lab_, first_path_, best_lab_, best_path_;
  Code first_code_, best_code_;
};

std::vector<int> uniform_colors(int n) { return std::vector<int>(n, 0); }

}  // namespace

class GroupBuilder {
 public:
  static PermutationGroup build(int n, std::vector<Permutation> gens, std::vector<int> base,
                                const AutOptions& options) {
    PermutationGroup group;
    group.degree_ = n;
    group.generators_ = std::move(gens);
    group.base_ = std::move(base);

    UnionFind all(n);
    for (const auto& g : group.generators_) {
      for (int x = 0; x < n; ++x) all.unite(x, g[x]);
    }
    group.orbit_of_.resize(n);
    for (int v = 0; v < n; ++v) group.orbit_of_[v] = all.find(v);

    // Transversal of G_(b_0..b_{i-1}) over the orbit of b_i.
    std::vector<std::vector<Permutation>> transversals;
    GroupOrder order = 1;
    const auto& base_points = group.base_;
    for (std::size_t i = 0; i < base_points.size(); ++i) {
      std::vector<const Permutation*> level_gens;
      std::span<const int> prefix(base_points.data(), i);
      for (const auto& g : group.generators_) {
        if (fixes_pointwise(g, prefix)) level_gens.push_back(&g);
      }
      std::vector<int> reps(n, -1);
      std::vector<Permutation> level;
      const int b = base_points[i];
      reps[b] = 0;
      level.push_back(Permutation::identity(n));
      std::deque<int> queue{b};
      while (!queue.empty()) {
        const int w = queue.front();
        queue.pop_front();
        for (const Permutation* g : level_gens) {
          const int x = (*g)[w];
          if (reps[x] >= 0) continue;
          reps[x] = static_cast<int>(level.size());
          level.push_back(compose(*g, level[reps[w]]));
          queue.push_back(x);
        }
      }
      order *= level.size();
      transversals.push_back(std::move(level));
    }
    group.order_ = order;

    if (order <= options.enum_cap) {
      group.enumerated_ = true;
      group.elements_.reserve(static_cast<std::size_t>(order));
      std::vector<Permutation> partial{Permutation::identity(n)};
      // Products t_0 * t_1 * ... * t_k, each element exactly once.
      std::vector<Permutation> next;
      for (const auto& level : transversals) {
        next.clear();
        next.reserve(partial.size() * level.size());
        for (const auto& prefix : partial) {
          for (const auto& t : level) next.push_back(compose(prefix, t));
        }
        partial.swap(next);
      }
      group.elements_ = std::move(partial);
    }
    return group;
  }
};

namespace {

PermutationGroup run_group_search(const LayeredGraph& layers, std::span<const int> colors,
                                  const AutOptions& options) {
  SearchTree tree(layers, colors, /*canonical=*/false, /*stop_early=*/false);
  tree.run();
  return GroupBuilder::build(layers.n, tree.generators(), tree.first_path(), options);
}

void check_vertex_colors(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) {
    throw DomainError("vertex coloring length does not match vertex count");
  }
}

}  // namespace

PermutationGroup automorphism_group(const Graph& g, const AutOptions& options) {
  const auto colors = uniform_colors(g.order());
  return run_group_search(single_layer(g), colors, options);
}

PermutationGroup automorphism_group(const Graph& g, std::span<const int> vertex_colors,
                                    const AutOptions& options) {
  check_vertex_colors(g, vertex_colors);
  return run_group_search(single_layer(g), vertex_colors, options);
}

PermutationGroup automorphism_group(const Graph& g, std::span<const int> vertex_colors,
                                    std::span<const int> edge_colors,
                                    const AutOptions& options) {
  check_vertex_colors(g, vertex_colors);
  return run_group_search(edge_colored_layers(g, edge_colors), vertex_colors, options);
}

bool only_identity_preserves(const Graph& g, std::span<const int> vertex_colors) {
  check_vertex_colors(g, vertex_colors);
  const LayeredGraph layers = single_layer(g);
  SearchTree tree(layers, vertex_colors, false, /*stop_early=*/true);
  tree.run();
  return tree.generators().empty();
}

bool only_identity_preserves(const Graph& g, std::span<const int> vertex_colors,
                             std::span<const int> edge_colors) {
  check_vertex_colors(g, vertex_colors);
  const LayeredGraph layers = edge_colored_layers(g, edge_colors);
  SearchTree tree(layers, vertex_colors, false, /*stop_early=*/true);
  tree.run();
  return tree.generators().empty();
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) throw DomainError("permutation length does not match vertex count");
  for (int u = 0; u < g.order(); ++u) {
    VertexSet image = 0;
    for (int v : set_members(g.row(u))) image |= bit(p[v]);
    if (image != g.row(p[u])) return false;
  }
  return true;
}

std::vector<int> induced_edge_action(const Graph& g, const Permutation& p) {
  if (!is_automorphism(g, p)) throw DomainError("permutation is not an automorphism");
  std::vector<int> action(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edges()[i];
    action[i] = g.edge_id(p[e.u], p[e.v]);
  }
  return action;
}

std::vector<int> canonical_labeling(const Graph& g) {
  const auto colors = uniform_colors(g.order());
  const LayeredGraph layers = single_layer(g);
  SearchTree tree(layers, colors, /*canonical=*/true, false);
  tree.run();
  std::vector<int> position(g.order());
  const auto& lab = tree.best_lab();
  for (int i = 0; i < g.order(); ++i) position[lab[i]] = i;
  return position;
}

std::string canonical_form(const Graph& g) {
  const auto position = canonical_labeling(g);
  return to_graph6(relabel(g, position));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool group_order_equal_line(const Graph& g, const AutOptions& options) {
  if (g.size() == 0) throw DomainError("line graph needs at least one edge");
  if (!is_connected(g)) throw DomainError("order comparison requires a connected graph");
  return automorphism_group(g, options).order() ==
         automorphism_group(line_graph(g), options).order();
}

}  // namespace symbreak
