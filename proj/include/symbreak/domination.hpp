#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

struct DominationOptions {
  bool want_all = false;
  // Enumerating all gamma-sets is limited to desk-scale graphs.
  int all_sets_max_order = 16;
  std::size_t all_sets_cap = 100'000;
  std::uint64_t node_budget = 100'000'000;
};

struct DominationResult {
  int gamma = 0;
  VertexSet one_set = 0;
  // Every gamma-set in lexicographic vertex order; present iff requested.
  std::optional<std::vector<VertexSet>> all_sets;
};

// N[s] = V.
bool is_dominating_set(const Graph& g, VertexSet s);

// Exact gamma by branch and bound: branch on the closed neighborhood of an
// undominated vertex with the fewest covering options, prune with the
// ceil(undominated / max-cover) bound against a greedy incumbent.
DominationResult domination_number(const Graph& g, const DominationOptions& options = {});

// gamma(L(G)), the edge domination number of g.
int gamma_of_line_graph(const Graph& g);

// Lexicographic order on vertex sets viewed as sorted member lists.
bool lex_less(VertexSet a, VertexSet b);

}  // namespace symbreak
