#include "symbreak/domination.hpp"

#include <algorithm>
#include <string>

#include "symbreak/errors.hpp"

namespace symbreak {

bool is_dominating_set(const Graph& g, VertexSet s) {
  return neighborhoods(g, s & all_vertices(g.order())).closed == all_vertices(g.order());
}

bool lex_less(VertexSet a, VertexSet b) {
  const auto ma = set_members(a);
  const auto mb = set_members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

namespace {

class DominationSolver {
 public:
  DominationSolver(const Graph& g, std::uint64_t budget)
      : n_(g.order()), all_(all_vertices(g.order())), budget_(budget) {
    closed_.resize(n_);
    for (int v = 0; v < n_; ++v) closed_[v] = closed_neighborhood(g, v);
  }

  VertexSet greedy() const {
    VertexSet dominated = 0;
    VertexSet chosen = 0;
    while (dominated != all_) {
      int best = -1;
      int best_cover = -1;
      for (int w = 0; w < n_; ++w) {
        const int cover = std::popcount(closed_[w] & ~dominated);
        if (cover > best_cover) {
          best = w;
          best_cover = cover;
        }
      }
      chosen |= bit(best);
      dominated |= closed_[best];
    }
    return chosen;
  }

  VertexSet minimum() {
    best_ = greedy();
    best_size_ = set_size(best_);
    branch(0, 0, 0);
    return best_;
  }

  // All dominating sets of size k, generated in lexicographic order.
  std::vector<VertexSet> all_of_size(int k, std::size_t cap) {
    std::vector<VertexSet> out;
    enumerate(0, 0, 0, k, cap, out);
    return out;
  }

 private:
  void tick() {
    if (++nodes_ > budget_) {
      throw CapabilityError("domination search exceeded the node budget of " +
                            std::to_string(budget_));
    }
  }

  int max_cover(VertexSet undominated) const {
    int best = 0;
    for (int w = 0; w < n_; ++w) best = std::max(best, std::popcount(closed_[w] & undominated));
    return best;
  }

  void branch(VertexSet dominated, VertexSet chosen, int k) {
    tick();
    if (dominated == all_) {
      if (k < best_size_) {
        best_size_ = k;
        best_ = chosen;
      }
      return;
    }
    const VertexSet undominated = all_ & ~dominated;
    const int cover = max_cover(undominated);
    const int need = (std::popcount(undominated) + cover - 1) / cover;
    if (k + need >= best_size_) return;

    int pick = -1;
    int options = n_ + 1;
    for (int u : set_members(undominated)) {
      const int c = std::popcount(closed_[u]);
      if (c < options) {
        pick = u;
        options = c;
      }
    }
    auto candidates = set_members(closed_[pick]);
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return std::popcount(closed_[a] & undominated) > std::popcount(closed_[b] & undominated);
    });
    for (int w : candidates) {
      branch(dominated | closed_[w], chosen | bit(w), k + 1);
      if (k + need >= best_size_) return;
    }
  }

  void enumerate(int next, VertexSet dominated, VertexSet chosen, int remaining, std::size_t cap,
                 std::vector<VertexSet>& out) {
    tick();
    if (remaining == 0) {
      if (dominated != all_) return;
      if (out.size() >= cap) {
        throw CapabilityError("more than " + std::to_string(cap) + " gamma-sets");
      }
      out.push_back(chosen);
      return;
    }
    if (next >= n_) return;
    const VertexSet undominated = all_ & ~dominated;
    const VertexSet future = all_ & ~all_vertices(next);
    for (int u : set_members(undominated)) {
      if ((closed_[u] & future) == 0) return;
    }
    if (std::popcount(undominated) > remaining * max_cover(undominated)) return;
    for (int w = next; w < n_; ++w) {
      enumerate(w + 1, dominated | closed_[w], chosen | bit(w), remaining - 1, cap, out);
    }
  }

  int n_;
  VertexSet all_;
  std::vector<VertexSet> closed_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  VertexSet best_ = 0;
  int best_size_ = 0;
};

}  // namespace

DominationResult domination_number(const Graph& g, const DominationOptions& options) {
  if (g.order() < 1) throw DomainError("domination number of the empty graph");
  DominationSolver solver(g, options.node_budget);
  DominationResult result;
  result.one_set = solver.minimum();
  result.gamma = set_size(result.one_set);
  if (options.want_all) {
    if (g.order() > options.all_sets_max_order) {
      throw CapabilityError("gamma-set enumeration is limited to order " +
                            std::to_string(options.all_sets_max_order));
    }
    result.all_sets = solver.all_of_size(result.gamma, options.all_sets_cap);
    // The lexicographically first gamma-set is the reported certificate.
    result.one_set = result.all_sets->front();
  }
  return result;
}

int gamma_of_line_graph(const Graph& g) { return domination_number(line_graph(g)).gamma; }

}  // namespace symbreak
