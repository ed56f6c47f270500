#include "symbreak/structure.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak {
namespace {

TEST(StructureTest, HamiltonicityMatchesOracle) {
  for (const Graph& g : oracle::connected_up_to(6)) {
    ASSERT_EQ(is_hamiltonian(g), oracle::hamiltonian(g)) << describe(g);
    ASSERT_EQ(is_traceable(g), oracle::traceable(g)) << describe(g);
  }
}

TEST(StructureTest, RandomGraphsUpToEightVertices) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::labeled_graph(n, trial % 2 == 0 ? rng() : rng() & rng());
    ASSERT_EQ(is_hamiltonian(g), oracle::hamiltonian(g)) << describe(g);
    ASSERT_EQ(is_traceable(g), oracle::traceable(g)) << describe(g);
  }
}

TEST(StructureTest, Petersen) {
  const Graph p = petersen_graph();
  EXPECT_FALSE(is_hamiltonian(p));
  EXPECT_TRUE(is_traceable(p));
  EXPECT_FALSE(is_claw_free(p));
  EXPECT_TRUE(is_triangle_free(p));
}

TEST(StructureTest, SmallCases) {
  EXPECT_TRUE(is_traceable(empty_graph(1)));
  EXPECT_FALSE(is_hamiltonian(empty_graph(1)));
  EXPECT_FALSE(is_hamiltonian(complete_graph(2)));
  EXPECT_TRUE(is_hamiltonian(complete_graph(3)));
  EXPECT_FALSE(is_traceable(star_graph(3)));
  EXPECT_TRUE(is_hamiltonian(complete_bipartite(4, 4)));
  EXPECT_FALSE(is_hamiltonian(complete_bipartite(3, 4)));
  EXPECT_TRUE(is_traceable(complete_bipartite(3, 4)));
}

TEST(StructureTest, BudgetExhaustion) {
  // K_{20,21} is not Hamiltonian and the pruning does not see it quickly.
  EXPECT_THROW(is_hamiltonian(complete_bipartite(20, 21), 1000), CapabilityError);
}

TEST(StructureTest, ClawFreeness) {
  EXPECT_FALSE(is_claw_free(star_graph(3)));
  EXPECT_TRUE(is_claw_free(cycle_graph(7)));
  EXPECT_TRUE(is_claw_free(complete_graph(6)));
  EXPECT_FALSE(is_claw_free(complete_bipartite(3, 3)));
}

TEST(StructureTest, LineGraphsAreClawFree) {
  for (const Graph& g : oracle::connected_up_to(6)) {
    if (g.size() == 0) continue;
    EXPECT_TRUE(is_claw_free(line_graph(g))) << describe(g);
  }
}

TEST(StructureTest, TriangleFreeComplementIsClawFree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const Graph g = oracle::labeled_graph(n, rng() & rng());
    if (!is_triangle_free(g)) continue;
    EXPECT_TRUE(is_claw_free(complement(g))) << describe(g);
  }
}

TEST(StructureTest, Recognizers) {
  EXPECT_TRUE(is_star(star_graph(1)));
  EXPECT_TRUE(is_star(star_graph(5)));
  EXPECT_FALSE(is_star(path_graph(4)));
  EXPECT_TRUE(is_cycle(cycle_graph(3)));
  EXPECT_FALSE(is_cycle(disjoint_union(cycle_graph(3), cycle_graph(3))));
  EXPECT_TRUE(is_path(path_graph(1)));
  EXPECT_TRUE(is_path(path_graph(6)));
  EXPECT_FALSE(is_path(star_graph(3)));
  EXPECT_TRUE(is_balanced_complete_bipartite(complete_bipartite(4, 4)));
  EXPECT_TRUE(is_balanced_complete_bipartite(complete_graph(2)));
  EXPECT_FALSE(is_balanced_complete_bipartite(complete_bipartite(3, 4)));
  EXPECT_FALSE(is_balanced_complete_bipartite(cycle_graph(6)));
  EXPECT_TRUE(is_balanced_complete_bipartite(cycle_graph(4)));
  EXPECT_TRUE(has_k2_component(disjoint_union(complete_graph(2), cycle_graph(3))));
  EXPECT_FALSE(has_k2_component(path_graph(3)));
}

TEST(StructureTest, ClassifySpecial) {
  const auto f = classify_special(path_graph(5));
  EXPECT_TRUE(f.is_path);
  EXPECT_TRUE(f.is_tree);
  EXPECT_TRUE(f.traceable);
  EXPECT_FALSE(f.hamiltonian);
  EXPECT_TRUE(f.claw_free);
  const auto k = classify_special(complete_graph(4));
  EXPECT_TRUE(k.is_complete);
  EXPECT_TRUE(k.hamiltonian);
  EXPECT_FALSE(k.triangle_free);
}

}  // namespace
}  // namespace symbreak
