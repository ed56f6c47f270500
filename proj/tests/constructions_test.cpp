#include "symbreak/constructions.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"
#include "symbreak/structure.hpp"

namespace symbreak {
namespace {

// Independent check of a witness with the brute-force oracles.
void expect_oracle_agrees(const CertifiedWitness& w, const WitnessRequest& req) {
  const Graph& g = w.graph;
  EXPECT_TRUE(is_connected(g));
  if (g.order() <= 12) EXPECT_EQ(oracle::domination_number(g), req.gamma) << describe(g);
  EXPECT_TRUE(oracle::dominates(g, w.gamma_set));
  EXPECT_EQ(set_size(w.gamma_set), req.gamma);
  if (g.order() <= 7) {
    if (req.kind == WitnessKind::kNumber) {
      EXPECT_EQ(oracle::distinguishing_number(g), req.d) << describe(g);
    } else {
      EXPECT_EQ(oracle::distinguishing_index(g), req.d) << describe(g);
    }
  }
}

TEST(ConstructionsTest, CaseSelection) {
  EXPECT_EQ(witness({3, 3, WitnessKind::kNumber}).case_tag, "spider");
  EXPECT_EQ(witness({1, 6, WitnessKind::kNumber}).case_tag, "star");
  EXPECT_EQ(witness({3, 1, WitnessKind::kNumber}).case_tag, "asymmetric");
  EXPECT_EQ(witness({3, 2, WitnessKind::kNumber}).case_tag, "star-path");
  EXPECT_EQ(witness({1, 1, WitnessKind::kNumber}).case_tag, "join");
}

TEST(ConstructionsTest, StarIsK1d) {
  const auto w = witness({1, 6, WitnessKind::kNumber});
  EXPECT_TRUE(is_star(w.graph));
  EXPECT_EQ(w.graph.order(), 7);
  EXPECT_EQ(w.achieved_d, 6);
}

TEST(ConstructionsTest, SmallWitnessesAgreeWithOracles) {
  for (WitnessKind kind : {WitnessKind::kNumber, WitnessKind::kIndex}) {
    for (int gamma = 1; gamma <= 3; ++gamma) {
      for (int d = 1; d <= 3; ++d) {
        const WitnessRequest req{gamma, d, kind};
        const auto w = witness(req);
        EXPECT_EQ(w.achieved_gamma, gamma);
        EXPECT_EQ(w.achieved_d, d);
        expect_oracle_agrees(w, req);
      }
    }
  }
}

TEST(ConstructionsTest, TableFourByFour) {
  for (WitnessKind kind : {WitnessKind::kNumber, WitnessKind::kIndex}) {
    const auto cells = witness_table(4, 4, kind);
    ASSERT_EQ(cells.size(), 16U);
    for (const auto& cell : cells) {
      ASSERT_TRUE(cell.witness.has_value()) << cell.error;
      EXPECT_EQ(cell.witness->achieved_gamma, cell.request.gamma);
      EXPECT_EQ(cell.witness->achieved_d, cell.request.d);
      const auto group = automorphism_group(cell.witness->graph);
      if (kind == WitnessKind::kNumber) {
        EXPECT_TRUE(is_distinguishing_vertex(cell.witness->graph,
                                             {cell.witness->labeling, cell.request.d}, group));
      } else {
        EXPECT_TRUE(is_distinguishing_edge(cell.witness->graph,
                                           {cell.witness->labeling, cell.request.d}, group));
      }
    }
  }
}

TEST(ConstructionsTest, CertificateJson) {
  const auto w = witness({2, 3, WitnessKind::kIndex});
  const auto j = certificate_json(w);
  EXPECT_EQ(j["kind"], "index");
  EXPECT_EQ(j["gamma"], 2);
  EXPECT_EQ(j["d"], 3);
  EXPECT_EQ(j["graph6"], to_graph6(w.graph));
  EXPECT_EQ(j["edges"].size(), static_cast<std::size_t>(w.graph.size()));
  EXPECT_EQ(j["edge_labels"].size(), static_cast<std::size_t>(w.graph.size()));
  EXPECT_EQ(j["gamma_set"].size(), 2U);
  const auto v = certificate_json(witness({2, 3, WitnessKind::kNumber}));
  EXPECT_EQ(v["vertex_labels"].size(), static_cast<std::size_t>(v["n"].get<int>()));
}

TEST(ConstructionsTest, Errors) {
  EXPECT_THROW(witness({0, 2, WitnessKind::kNumber}), DomainError);
  EXPECT_THROW(witness({2, 0, WitnessKind::kNumber}), DomainError);
  EXPECT_THROW(witness({11, 10, WitnessKind::kNumber}), CapabilityError);
  // Spider on 1 + 8 + 64 vertices.
  EXPECT_THROW(witness({8, 8, WitnessKind::kNumber}), CapabilityError);
  EXPECT_THROW(parse_witness_kind("edge"), DomainError);
  EXPECT_EQ(parse_witness_kind("index"), WitnessKind::kIndex);
}

}  // namespace
}  // namespace symbreak
