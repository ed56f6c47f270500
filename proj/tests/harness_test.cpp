#include "symbreak/harness.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak {
namespace {

CheckOutcome outcome(const Graph& g, const std::string& check, const std::string& part) {
  for (const auto& o : run_checks(g, {check})) {
    if (o.check_id == part) return o;
  }
  ADD_FAILURE() << "no part " << part;
  return {};
}

TEST(HarnessTest, CycleFiveMeetsDeltaBoundWithEquality) {
  const auto o = outcome(cycle_graph(5), "H2", "H2.ii");
  EXPECT_EQ(o.verdict, Verdict::kHolds);
  EXPECT_EQ(o.witness["D"], 3);
  EXPECT_EQ(o.witness["equality"], true);
  EXPECT_EQ(o.witness["in_class"], true);
}

TEST(HarnessTest, CompleteGraphExemptFromH5iii) {
  const auto o = outcome(complete_graph(7), "H5", "H5.iii");
  EXPECT_EQ(o.verdict, Verdict::kNotApplicable);
  EXPECT_TRUE(o.named_exception);
  EXPECT_NE(o.reason.find("complete graph"), std::string::npos);
  EXPECT_TRUE(o.exception_fails);
}

TEST(HarnessTest, P2IsLineOrderException) {
  const auto o = outcome(path_graph(2), "H7", "H7");
  EXPECT_EQ(o.verdict, Verdict::kNotApplicable);
  EXPECT_TRUE(o.named_exception);
  EXPECT_TRUE(o.exception_fails);
  EXPECT_EQ(o.witness["aut"], "2");
  EXPECT_EQ(o.witness["aut_line"], "1");
}

TEST(HarnessTest, LineOrderDiscovery) {
  const auto& ex = line_order_exceptions();
  ASSERT_TRUE(ex.q.has_value());
  ASSERT_TRUE(ex.line_q.has_value());
  // The paw and the diamond.
  const std::vector<std::pair<int, int>> paw_edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}};
  const Graph paw = Graph::from_edges(4, paw_edges);
  EXPECT_EQ(*ex.q, canonical_form(paw));
  EXPECT_EQ(*ex.line_q, canonical_form(line_graph(paw)));
  // Cross-check against brute-force automorphism counts at n <= 6, m <= 8.
  std::vector<std::string> brute;
  for (const Graph& g : oracle::connected_up_to(6)) {
    if (g.order() < 3 || g.size() > 8) continue;
    if (oracle::all_automorphisms(g).size() != oracle::all_automorphisms(line_graph(g)).size()) {
      brute.push_back(canonical_form(g));
    }
  }
  std::vector<std::string> ours;
  for (const auto& s : ex.discovered) {
    const Graph g = parse_graph6(s);
    if (g.order() <= 6 && g.size() <= 8) ours.push_back(s);
  }
  std::sort(brute.begin(), brute.end());
  std::sort(ours.begin(), ours.end());
  EXPECT_EQ(ours, brute);
}

TEST(HarnessTest, DisconnectedInputsAreNeverViolated) {
  const Graph g = disjoint_union(complete_graph(2), cycle_graph(4));
  for (const auto& o : run_checks(g, check_ids())) {
    EXPECT_NE(o.verdict, Verdict::kViolated) << o.check_id;
  }
  const auto h3 = outcome(g, "H3", "H3");
  EXPECT_EQ(h3.verdict, Verdict::kNotApplicable);
  EXPECT_EQ(h3.reason, "G is disconnected");
  const auto h6 = outcome(g, "H6", "H6.i");
  EXPECT_EQ(h6.reason, "D' undefined on K_2 component");
}

TEST(HarnessTest, DisconnectedGraphDominationOfComplement) {
  const auto o = outcome(disjoint_union(path_graph(3), path_graph(2)), "H1", "H1.iii");
  EXPECT_EQ(o.verdict, Verdict::kHolds);
  EXPECT_EQ(o.witness["applied_to"], "G");
}

TEST(HarnessTest, ViolationsCarryWitness) {
  // C_4 has D = 3 > n - gamma = 2 and is not complete.
  const auto o = outcome(cycle_graph(4), "H5", "H5.iii");
  EXPECT_EQ(o.verdict, Verdict::kViolated);
  EXPECT_EQ(o.witness["D"], 3);
  EXPECT_EQ(o.witness["gamma"], 2);
}

TEST(HarnessTest, GammaSetWitnessNamesTheSet) {
  const auto o = outcome(complete_graph(4), "H12", "H12.i");
  EXPECT_EQ(o.verdict, Verdict::kViolated);
  EXPECT_TRUE(o.witness.contains("S"));
}

TEST(HarnessTest, CapabilityErrorsBecomeSkips) {
  HarnessOptions opts;
  opts.distinguishing.random_trials = 0;
  opts.distinguishing.node_budget = 5;
  const auto outcomes = run_checks(petersen_graph(), {"H2"}, opts);
  for (const auto& o : outcomes) {
    EXPECT_EQ(o.verdict, Verdict::kSkipped);
    EXPECT_FALSE(o.reason.empty());
  }
}

TEST(HarnessTest, P31Examples) {
  const auto c6 = classify_p31(cycle_graph(6));
  ASSERT_TRUE(c6);
  EXPECT_TRUE(c6->index_equals_gamma);
  EXPECT_TRUE(c6->number_equals_gamma);
  const auto star = classify_p31(star_graph(5));
  ASSERT_TRUE(star);
  EXPECT_TRUE(star->index_above_gamma);
  const auto p9 = classify_p31(path_graph(9));
  ASSERT_TRUE(p9);
  EXPECT_TRUE(p9->index_below_gamma);
  EXPECT_FALSE(classify_p31(path_graph(2)));
  EXPECT_FALSE(classify_p31(disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST(HarnessTest, CheckSelection) {
  EXPECT_EQ(parse_check_selection("all").size(), 17U);
  EXPECT_EQ(parse_check_selection("H5, H1"), (std::vector<std::string>{"H1", "H5"}));
  EXPECT_THROW(parse_check_selection("H1,H99"), DomainError);
  EXPECT_THROW(parse_check_selection(""), DomainError);
  EXPECT_EQ(part_ids({"H5"}).size(), 6U);
}

TEST(HarnessTest, TalliesSumToGraphCount) {
  SweepParams params;
  params.n_max = 5;
  params.checks = check_ids();
  const auto r = sweep(params);
  EXPECT_EQ(r.json["graphs"]["total"], 31);
  for (const auto& [id, c] : r.json["counts"].items()) {
    const int sum = c["holds"].get<int>() + c["na"].get<int>() + c["violated"].get<int>() +
                    c["skipped"].get<int>();
    EXPECT_EQ(sum, 31) << id;
  }
}

TEST(HarnessTest, DominationSweepToSeven) {
  SweepParams params;
  params.n_max = 7;
  params.checks = {"H1"};
  const auto r = sweep(params);
  EXPECT_EQ(r.json["graphs"]["total"], 996);
  EXPECT_EQ(r.violations, 0U);
}

TEST(HarnessTest, LineGraphIdentityToFive) {
  SweepParams params;
  params.n_max = 5;
  params.checks = {"H8"};
  EXPECT_EQ(sweep(params).violations, 0U);
}

TEST(HarnessTest, DeterministicAcrossWorkers) {
  SweepParams params;
  params.n_max = 6;
  params.checks = check_ids();
  const std::string one = sweep(params).json.dump();
  params.workers = 2;
  EXPECT_EQ(sweep(params).json.dump(), one);
  params.workers = 8;
  const auto r8 = sweep(params);
  EXPECT_EQ(r8.json.dump(), one);
  EXPECT_EQ(sweep_csv(r8, params.checks).substr(0, 12), "graph6,n,m,H");
}

TEST(HarnessTest, CorpusSweepKeepsInputOrder) {
  SweepParams params;
  params.checks = {"P31"};
  const auto r = sweep_corpus({path_graph(9), cycle_graph(6)}, params);
  ASSERT_EQ(r.graphs.size(), 2U);
  EXPECT_EQ(r.graphs[0].n, 9);
  EXPECT_EQ(r.json["p31"]["graphs"], 2);
  EXPECT_EQ(r.json["params"]["source"], "corpus");
}

TEST(HarnessTest, SweepRangeErrors) {
  SweepParams params;
  params.checks = {"H1"};
  params.n_max = 10;
  EXPECT_THROW(sweep(params), DomainError);
}

}  // namespace
}  // namespace symbreak
