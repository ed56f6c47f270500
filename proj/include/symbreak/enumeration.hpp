#pragma once

#include <optional>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

inline constexpr int kMaxEnumerationOrder = 9;

struct EnumerationOptions {
  // Keep only graphs whose girth is at least this (forests always pass).
  // The property is inherited by connected vertex-deleted subgraphs, so the
  // filter is applied during generation.
  std::optional<int> min_girth;
};

// One canonically labeled representative per isomorphism class of connected
// graphs on n vertices, sorted by graph6 record. Generated by adding a
// vertex to every connected (n-1)-vertex graph over all nonempty neighbor
// sets and deduplicating canonical forms. Throws DomainError unless
// 1 <= n <= kMaxEnumerationOrder.
std::vector<Graph> enumerate_connected(int n, const EnumerationOptions& options = {});

// levels[k] holds the graphs on k+1 vertices.
std::vector<std::vector<Graph>> enumerate_connected_up_to(int n_max,
                                                          const EnumerationOptions& options = {});

}  // namespace symbreak
