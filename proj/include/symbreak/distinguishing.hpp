#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbreak/automorphism.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// Colors are 1..d.
struct VertexLabeling {
  std::vector<int> colors;
  int d = 0;
};

// Colors indexed by Graph::edges().
struct EdgeLabeling {
  std::vector<int> colors;
  int d = 0;
};

enum class IndexRoute { kDirect, kViaLineGraph, kCrossCheck };

std::string to_string(IndexRoute route);

struct DistinguishingOptions {
  std::uint64_t seed = 0;
  int random_trials = 32;
  std::uint64_t node_budget = 100'000'000;  // per (graph, d) pair
  std::uint64_t enum_cap = 1'000'000;
};

struct DistinguishingResult {
  int value = 0;
  std::vector<int> witness;  // vertex or edge colors in 1..value
  IndexRoute method = IndexRoute::kDirect;
  // How the witness was found at the final d: "trivial", "random" or
  // "exhaustive".
  std::string found_by;
};

// The only automorphism in `group` (which must be Aut(G)) preserving the
// coloring is the identity. Uses the element list when enumerated,
// otherwise a color-respecting automorphism search.
bool is_distinguishing_vertex(const Graph& g, const VertexLabeling& labeling,
                              const PermutationGroup& group);
// Edge version. Throws DomainError when g has fewer than 3 vertices or no
// edges.
bool is_distinguishing_edge(const Graph& g, const EdgeLabeling& labeling,
                            const PermutationGroup& group);

// D(G): exact minimum with a witness. For each d from the trivial lower
// bound, a seeded batch of random labelings is tried first and exhaustive
// backtracking decides otherwise, so every d below the answer is certified
// impossible. Throws CapabilityError when a search exceeds its node budget.
DistinguishingResult distinguishing_number(const Graph& g,
                                           const DistinguishingOptions& options = {});

// D'(G). Throws DomainError when g has fewer than 3 vertices or when some
// non-identity automorphism fixes every edge (a K_2 component or two
// isolated vertices), since no edge labeling can then be distinguishing.
// The line-graph route needs g connected. Cross-check runs both routes and
// throws ConsistencyError on disagreement unless |Aut(G)| != |Aut(L(G))|.
DistinguishingResult distinguishing_index(const Graph& g, IndexRoute route,
                                          const DistinguishingOptions& options = {});
// Cross-check up to 6 vertices, direct above.
DistinguishingResult distinguishing_index(const Graph& g,
                                          const DistinguishingOptions& options = {});

// True iff D'(G) is defined in the sense above.
bool edge_action_faithful(const Graph& g);

}  // namespace symbreak
