#include "symbreak/distinguishing.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "symbreak/errors.hpp"

namespace symbreak {

std::string to_string(IndexRoute route) {
  switch (route) {
    case IndexRoute::kDirect:
      return "direct";
    case IndexRoute::kViaLineGraph:
      return "via-line-graph";
    case IndexRoute::kCrossCheck:
      return "cross-check";
  }
  return "unknown";
}

namespace {

void check_colors(std::span<const int> colors, std::size_t expected, int d) {
  if (colors.size() != expected) throw DomainError("labeling length mismatch");
  for (int c : colors) {
    if (c < 1 || c > d) throw DomainError("label outside 1..d");
  }
}

// The action of Aut(G) on the points being colored (vertices or edges).
// With the group enumerated and at most 64 points, every non-identity
// element is kept explicitly; otherwise membership questions go to the
// color-respecting automorphism search.
class PointAction {
 public:
  static PointAction on_vertices(const Graph& g, const PermutationGroup& group) {
    PointAction a(g, false, g.order());
    if (group.enumerated()) {
      for (const auto& p : group.elements()) {
        if (!p.is_identity()) a.add(p.image());
      }
    } else {
      a.explicit_ = false;
    }
    UnionFind twins(g.order());
    for (const auto& [u, v] : twin_pairs(g)) twins.unite(u, v);
    a.order_points(group.orbit_of(), twins);
    return a;
  }

  static PointAction on_edges(const Graph& g, const PermutationGroup& group) {
    PointAction a(g, true, g.size());
    UnionFind orbits(g.size());
    for (const auto& gen : group.generators()) {
      const auto act = induced_edge_action(g, gen);
      for (int i = 0; i < g.size(); ++i) orbits.unite(i, act[i]);
    }
    if (group.enumerated() && g.size() <= 64) {
      for (const auto& p : group.elements()) {
        if (!p.is_identity()) a.add(induced_edge_action(g, p));
      }
    } else {
      a.explicit_ = false;
    }
    // A vertex twin swap that exchanges exactly two edges makes those edges
    // twins too.
    UnionFind twins(g.size());
    for (const auto& [u, v] : twin_pairs(g)) {
      std::vector<int> swap(g.order());
      std::iota(swap.begin(), swap.end(), 0);
      std::swap(swap[u], swap[v]);
      const auto act = induced_edge_action(g, Permutation(swap));
      std::vector<int> moved;
      for (int i = 0; i < g.size(); ++i) {
        if (act[i] != i) moved.push_back(i);
      }
      if (moved.size() == 2) twins.unite(moved[0], moved[1]);
    }
    std::vector<int> rep(g.size());
    for (int i = 0; i < g.size(); ++i) rep[i] = orbits.find(i);
    a.order_points(rep, twins);
    return a;
  }

  int points() const { return points_; }
  bool explicit_elements() const { return explicit_; }
  const std::vector<int>& order() const { return order_; }
  // Previously ordered point whose transposition with x is an automorphism,
  // or -1. Colors strictly increase along such chains: the least coloring
  // (in search order) of each orbit under twin swaps and color renaming
  // satisfies this together with the canonical color order.
  int prev_twin(int x) const { return prev_twin_[x]; }

  // Full coloring (values >= 1) preserved only by the identity.
  bool distinguishes(std::span<const int> colors) const {
    if (explicit_) {
      for (const auto& img : images_) {
        bool preserved = true;
        for (int x = 0; x < points_ && preserved; ++x) preserved = colors[img[x]] == colors[x];
        if (preserved) return false;
      }
      return true;
    }
    return identity_only(colors);
  }

  // Partial coloring (0 = uncolored). True when a non-identity
  // automorphism preserves all assigned colors and fixes every uncolored
  // point, so no completion can distinguish.
  bool stuck(std::span<const int> colors, int d) const {
    std::vector<int> pinned(colors.begin(), colors.end());
    for (int x = 0; x < points_; ++x) {
      if (pinned[x] == 0) pinned[x] = d + 1 + x;
    }
    return !identity_only(pinned);
  }

  struct Element {
    std::vector<int> image;
    std::vector<int> preimage;
    VertexSet support = 0;
  };
  const std::vector<Element>& elements() const { return elements_; }

 private:
  PointAction(const Graph& g, bool on_edges, int points)
      : g_(&g), on_edges_(on_edges), points_(points) {}

  struct UnionFind {
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    }
    void unite(int a, int b) {
      a = find(a);
      b = find(b);
      if (a < b) std::swap(a, b);
      if (a != b) parent[a] = b;
    }
    std::vector<int> parent;
  };

  void add(std::vector<int> image) {
    Element e;
    e.preimage.resize(image.size());
    for (int x = 0; x < static_cast<int>(image.size()); ++x) {
      e.preimage[image[x]] = x;
      if (image[x] != x) e.support |= bit(x);
    }
    images_.push_back(image);
    e.image = std::move(image);
    elements_.push_back(std::move(e));
  }

  static std::vector<std::pair<int, int>> twin_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u) {
      for (int v = u + 1; v < g.order(); ++v) {
        if ((g.row(u) & ~bit(v)) == (g.row(v) & ~bit(u))) out.emplace_back(u, v);
      }
    }
    return out;
  }

  // Points grouped by orbit so that symmetric points are colored together.
  void order_points(const std::vector<int>& orbit_rep, UnionFind& twins) {
    order_.resize(points_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return orbit_rep[a] < orbit_rep[b]; });
    prev_twin_.assign(points_, -1);
    std::vector<int> last(points_, -1);
    for (int x : order_) {
      const int t = twins.find(x);
      prev_twin_[x] = last[t];
      last[t] = x;
    }
  }

  bool identity_only(std::span<const int> colors) const {
    if (on_edges_) {
      const std::vector<int> plain(g_->order(), 0);
      return only_identity_preserves(*g_, plain, colors);
    }
    return only_identity_preserves(*g_, colors);
  }

  const Graph* g_;
  bool on_edges_;
  int points_;
  bool explicit_ = true;
  std::vector<std::vector<int>> images_;
  std::vector<Element> elements_;
  std::vector<int> order_;
  std::vector<int> prev_twin_;
};

// Exhaustive search for a d-coloring of the points that only the identity
// preserves. Colors are assigned in canonical order (a point may use at
// most one more than the largest color so far).
class ColoringSearch {
 public:
  ColoringSearch(const PointAction& action, int d, std::uint64_t budget)
      : action_(action), d_(d), budget_(budget), colors_(action.points(), 0) {}

  bool run() {
    if (action_.explicit_elements()) {
      std::vector<int> alive(action_.elements().size());
      std::iota(alive.begin(), alive.end(), 0);
      return explicit_step(0, 0, 0, alive);
    }
    return implicit_step(0, 0);
  }

  const std::vector<int>& colors() const { return colors_; }

 private:
  void tick() {
    if (++nodes_ > budget_) {
      throw CapabilityError("distinguishing search exceeded the node budget of " +
                            std::to_string(budget_) + " nodes at d=" + std::to_string(d_));
    }
  }

  int lowest(int x) const {
    const int t = action_.prev_twin(x);
    return t < 0 ? 1 : colors_[t] + 1;
  }

  bool explicit_step(int depth, int max_used, VertexSet colored, const std::vector<int>& alive) {
    tick();
    if (depth == action_.points()) return alive.empty();
    const int x = action_.order()[depth];
    const VertexSet now_colored = colored | bit(x);
    std::vector<int> next;
    next.reserve(alive.size());
    const auto& elements = action_.elements();
    for (int c = lowest(x); c <= std::min(d_, max_used + 1); ++c) {
      colors_[x] = c;
      next.clear();
      bool dead_end = false;
      for (int idx : alive) {
        const auto& e = elements[idx];
        const int y = e.image[x];
        const int w = e.preimage[x];
        // Broken once some colored point and its image disagree.
        if (((now_colored >> y) & 1U) && colors_[y] != c) continue;
        if (((now_colored >> w) & 1U) && colors_[w] != c) continue;
        if ((e.support & ~now_colored) == 0) {
          dead_end = true;
          break;
        }
        next.push_back(idx);
      }
      if (!dead_end && explicit_step(depth + 1, std::max(max_used, c), now_colored, next)) {
        return true;
      }
    }
    colors_[x] = 0;
    return false;
  }

  bool implicit_step(int depth, int max_used) {
    tick();
    if (depth == action_.points()) return action_.distinguishes(colors_);
    const int x = action_.order()[depth];
    for (int c = lowest(x); c <= std::min(d_, max_used + 1); ++c) {
      colors_[x] = c;
      if (depth + 1 < action_.points() && action_.stuck(colors_, d_)) continue;
      if (implicit_step(depth + 1, std::max(max_used, c))) return true;
    }
    colors_[x] = 0;
    return false;
  }

  const PointAction& action_;
  int d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colors_;
};

DistinguishingResult minimum_distinguishing(const PointAction& action, bool trivial_group,
                                            const DistinguishingOptions& options) {
  DistinguishingResult result;
  const int points = action.points();
  if (trivial_group) {
    result.value = 1;
    result.witness.assign(points, 1);
    result.found_by = "trivial";
    return result;
  }
  std::mt19937_64 rng(options.seed);
  for (int d = 2; d <= std::max(points, 2); ++d) {
    std::uniform_int_distribution<int> pick(1, d);
    std::vector<int> colors(points);
    for (int t = 0; t < options.random_trials; ++t) {
      for (int& c : colors) c = pick(rng);
      if (action.distinguishes(colors)) {
        result.value = d;
        result.witness = colors;
        result.found_by = "random";
        return result;
      }
    }
    ColoringSearch search(action, d, options.node_budget);
    if (search.run()) {
      result.value = d;
      result.witness = search.colors();
      result.found_by = "exhaustive";
      return result;
    }
  }
  throw ConsistencyError("no distinguishing coloring with one color per point");
}

PermutationGroup group_of(const Graph& g, const DistinguishingOptions& options) {
  AutOptions aut;
  aut.enum_cap = options.enum_cap;
  return automorphism_group(g, aut);
}

void check_index_domain(const Graph& g) {
  if (g.order() < 3) {
    throw DomainError("distinguishing index needs at least 3 vertices");
  }
  if (!edge_action_faithful(g)) {
    throw DomainError("D' undefined: a non-identity automorphism fixes every edge "
                      "(K_2 component or two isolated vertices)");
  }
}

DistinguishingResult index_direct(const Graph& g, const DistinguishingOptions& options) {
  const PermutationGroup group = group_of(g, options);
  const PointAction action = PointAction::on_edges(g, group);
  auto result = minimum_distinguishing(action, group.trivial(), options);
  result.method = IndexRoute::kDirect;
  return result;
}

DistinguishingResult index_via_line(const Graph& g, const DistinguishingOptions& options) {
  if (!is_connected(g)) throw DomainError("line-graph route needs a connected graph");
  auto result = distinguishing_number(line_graph(g), options);
  result.method = IndexRoute::kViaLineGraph;
  return result;
}

}  // namespace

bool edge_action_faithful(const Graph& g) {
  int isolated = 0;
  for (VertexSet comp : components(g)) {
    if (set_size(comp) == 2) return false;
    if (set_size(comp) == 1) ++isolated;
  }
  return isolated <= 1;
}

bool is_distinguishing_vertex(const Graph& g, const VertexLabeling& labeling,
                              const PermutationGroup& group) {
  check_colors(labeling.colors, g.order(), labeling.d);
  if (group.degree() != g.order()) throw DomainError("group degree does not match graph");
  if (group.enumerated()) {
    for (const auto& p : group.elements()) {
      if (p.is_identity()) continue;
      bool preserved = true;
      for (int x = 0; x < g.order() && preserved; ++x) {
        preserved = labeling.colors[p[x]] == labeling.colors[x];
      }
      if (preserved) return false;
    }
    return true;
  }
  return only_identity_preserves(g, labeling.colors);
}

bool is_distinguishing_edge(const Graph& g, const EdgeLabeling& labeling,
                            const PermutationGroup& group) {
  if (g.order() < 3) throw DomainError("edge distinguishing needs at least 3 vertices");
  if (g.size() == 0) throw DomainError("edge distinguishing needs at least one edge");
  check_colors(labeling.colors, g.size(), labeling.d);
  if (group.degree() != g.order()) throw DomainError("group degree does not match graph");
  if (group.enumerated()) {
    for (const auto& p : group.elements()) {
      if (p.is_identity()) continue;
      const auto act = induced_edge_action(g, p);
      bool preserved = true;
      for (int i = 0; i < g.size() && preserved; ++i) {
        preserved = labeling.colors[act[i]] == labeling.colors[i];
      }
      if (preserved) return false;
    }
    return true;
  }
  const std::vector<int> plain(g.order(), 0);
  return only_identity_preserves(g, plain, labeling.colors);
}

DistinguishingResult distinguishing_number(const Graph& g, const DistinguishingOptions& options) {
  if (g.order() < 1) throw DomainError("distinguishing number of the empty graph");
  const PermutationGroup group = group_of(g, options);
  const PointAction action = PointAction::on_vertices(g, group);
  auto result = minimum_distinguishing(action, group.trivial(), options);
  result.method = IndexRoute::kDirect;
  return result;
}

DistinguishingResult distinguishing_index(const Graph& g, IndexRoute route,
                                          const DistinguishingOptions& options) {
  check_index_domain(g);
  switch (route) {
    case IndexRoute::kDirect:
      return index_direct(g, options);
    case IndexRoute::kViaLineGraph:
      return index_via_line(g, options);
    case IndexRoute::kCrossCheck: {
      auto direct = index_direct(g, options);
      auto via = index_via_line(g, options);
      if (direct.value != via.value &&
          automorphism_group(g).order() == automorphism_group(line_graph(g)).order()) {
        std::string msg = "D'(G)=" + std::to_string(direct.value) +
                          " but D(L(G))=" + std::to_string(via.value) + " on " + describe(g);
        throw ConsistencyError(msg);
      }
      direct.method = IndexRoute::kCrossCheck;
      return direct;
    }
  }
  throw DomainError("unknown route");
}

DistinguishingResult distinguishing_index(const Graph& g, const DistinguishingOptions& options) {
  const bool small_connected = g.order() <= 6 && is_connected(g);
  return distinguishing_index(g, small_connected ? IndexRoute::kCrossCheck : IndexRoute::kDirect,
                              options);
}

}  // namespace symbreak
