#pragma once

#include <cstdint>

#include "symbreak/graph.hpp"

namespace symbreak {

struct StructureFlags {
  bool hamiltonian = false;
  bool traceable = false;
  bool claw_free = false;
  bool triangle_free = false;
  bool is_star = false;  // K_{1,k}, k >= 1
  bool is_tree = false;
  bool is_complete = false;
  bool is_complete_bipartite_balanced = false;  // K_{p,p}, p >= 1
  bool is_cycle = false;
  bool is_path = false;
};

inline constexpr std::uint64_t kDefaultHamiltonBudget = 10'000'000;

// Backtracking with a connectivity cut-off and a check that every
// unvisited vertex keeps enough free neighbors. Throws CapabilityError
// when the node budget runs out. Graphs with fewer than 3 vertices are
// never Hamiltonian; K_1 is traceable.
bool is_hamiltonian(const Graph& g, std::uint64_t budget = kDefaultHamiltonBudget);
bool is_traceable(const Graph& g, std::uint64_t budget = kDefaultHamiltonBudget);

// No vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);
bool is_triangle_free(const Graph& g);

bool is_complete(const Graph& g);
bool is_star(const Graph& g);
bool is_cycle(const Graph& g);
bool is_path(const Graph& g);
bool is_balanced_complete_bipartite(const Graph& g);
// Some connected component is a single edge.
bool has_k2_component(const Graph& g);

StructureFlags classify_special(const Graph& g,
                                std::uint64_t budget = kDefaultHamiltonBudget);

}  // namespace symbreak
