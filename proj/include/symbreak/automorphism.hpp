#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symbreak/graph.hpp"

namespace symbreak {

using GroupOrder = boost::multiprecision::cpp_int;

// Bijection on 0..n-1 stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless image is a bijection on 0..size-1.
  explicit Permutation(std::span<const int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator[](int x) const { return image_[x]; }
  std::vector<int> image() const { return {image_.begin(), image_.end()}; }

  bool is_identity() const;
  // Vertices moved by the permutation.
  VertexSet support() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  std::vector<std::uint8_t> image_;
};

// (p * q)(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

class PermutationGroup {
 public:
  PermutationGroup() = default;

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const GroupOrder& order() const { return order_; }
  bool trivial() const { return order_ == 1; }

  // True when every element is listed (order <= the enumeration cap).
  bool enumerated() const { return enumerated_; }
  // Throws CapabilityError naming the order when not enumerated.
  const std::vector<Permutation>& elements() const;

  // orbit_of()[v] is the smallest vertex in v's orbit.
  const std::vector<int>& orbit_of() const { return orbit_of_; }
  std::vector<VertexSet> orbits() const;
  // Base from the first path of the search tree; the pointwise stabilizer
  // of the whole base is trivial.
  const std::vector<int>& base() const { return base_; }

 private:
  friend class GroupBuilder;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  GroupOrder order_ = 1;
  bool enumerated_ = false;
  std::vector<Permutation> elements_;
  std::vector<int> orbit_of_;
  std::vector<int> base_;
};

struct AutOptions {
  std::uint64_t enum_cap = 1'000'000;
};

// Aut(G) by equitable refinement and backtracking. Generators are exact,
// the order comes from the orbit sizes along the first-path stabilizer
// chain, and elements are listed iff order <= enum_cap.
PermutationGroup automorphism_group(const Graph& g, const AutOptions& options = {});

// Automorphisms that also preserve a vertex coloring.
PermutationGroup automorphism_group(const Graph& g, std::span<const int> vertex_colors,
                                    const AutOptions& options = {});

// Automorphisms preserving a vertex coloring and an edge coloring indexed
// by g.edges(). Edge colors are arbitrary integers; only equality matters.
PermutationGroup automorphism_group(const Graph& g, std::span<const int> vertex_colors,
                                    std::span<const int> edge_colors,
                                    const AutOptions& options = {});

// True iff the only color-preserving automorphism is the identity. Stops at
// the first non-trivial automorphism found.
bool only_identity_preserves(const Graph& g, std::span<const int> vertex_colors);
bool only_identity_preserves(const Graph& g, std::span<const int> vertex_colors,
                             std::span<const int> edge_colors);

// Throws DomainError on a length mismatch.
bool is_automorphism(const Graph& g, const Permutation& p);

// The permutation of edge positions induced by a vertex automorphism:
// edge {u, v} goes to {p(u), p(v)}. Throws DomainError when p is not an
// automorphism of g.
std::vector<int> induced_edge_action(const Graph& g, const Permutation& p);

// canonical_labeling(g)[v] is v's position in the canonical relabeling.
std::vector<int> canonical_labeling(const Graph& g);
// graph6 record of the canonical relabeling; equal iff isomorphic.
std::string canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// |Aut(G)| == |Aut(L(G))|. Requires g connected with at least one edge.
bool group_order_equal_line(const Graph& g, const AutOptions& options = {});

std::string to_string(const GroupOrder& order);

}  // namespace symbreak
