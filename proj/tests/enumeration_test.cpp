#include "symbreak/enumeration.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "symbreak/automorphism.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/graph_io.hpp"

namespace symbreak {
namespace {

TEST(EnumerationTest, CountsMatchBurnside) {
  const auto expected = oracle::connected_counts(8);
  const auto levels = enumerate_connected_up_to(8);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(levels[n - 1].size(), expected[n]) << "n=" << n;
  }
  EXPECT_EQ(levels[3].size(), 6U);
  EXPECT_EQ(levels[6].size(), 853U);
}

TEST(EnumerationTest, MatchesPairwiseIsomorphismClasses) {
  for (int n = 1; n <= 6; ++n) {
    const auto ours = enumerate_connected(n);
    const auto classes = oracle::connected_classes(n);
    ASSERT_EQ(ours.size(), classes.size()) << "n=" << n;
    std::set<std::string> forms;
    for (const Graph& g : ours) forms.insert(canonical_form(g));
    for (const Graph& g : classes) EXPECT_TRUE(forms.count(canonical_form(g))) << describe(g);
  }
}

TEST(EnumerationTest, SevenVertexPipelineConsistency) {
  const auto seven = enumerate_connected(7);
  std::set<std::string> forms;
  for (const Graph& g : seven) {
    ASSERT_TRUE(is_connected(g));
    ASSERT_EQ(canonical_form(g), to_graph6(g)) << "representative is not canonical";
    forms.insert(to_graph6(g));
  }
  EXPECT_EQ(forms.size(), seven.size());
  // Random connected labeled graphs always land on a representative.
  std::mt19937_64 rng(17);
  int sampled = 0;
  while (sampled < 3000) {
    const Graph g = oracle::labeled_graph(7, rng() & ((std::uint64_t{1} << 21) - 1));
    if (!oracle::connected(g)) continue;
    ++sampled;
    ASSERT_TRUE(forms.count(canonical_form(g))) << describe(g);
  }
}

TEST(EnumerationTest, SortedByGraph6) {
  const auto six = enumerate_connected(6);
  for (std::size_t i = 1; i < six.size(); ++i) {
    EXPECT_LT(to_graph6(six[i - 1]), to_graph6(six[i]));
  }
}

TEST(EnumerationTest, GirthFilterMatchesPostFiltering) {
  EnumerationOptions five;
  five.min_girth = 5;
  const auto full = enumerate_connected_up_to(8);
  const auto filtered = enumerate_connected_up_to(8, five);
  for (int n = 1; n <= 8; ++n) {
    std::vector<std::string> expected;
    for (const Graph& g : full[n - 1]) {
      const auto len = oracle::girth(g);
      if (!len || *len >= 5) expected.push_back(to_graph6(g));
    }
    std::vector<std::string> got;
    for (const Graph& g : filtered[n - 1]) got.push_back(to_graph6(g));
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(EnumerationTest, GirthFiveCountsToNine) {
  EnumerationOptions five;
  five.min_girth = 5;
  const auto levels = enumerate_connected_up_to(9, five);
  const std::vector<std::size_t> counts = {1, 1, 1, 2, 4, 8, 18, 47, 137};
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(levels[n - 1].size(), counts[n - 1]) << "n=" << n;
}

TEST(EnumerationTest, RangeErrors) {
  EXPECT_THROW(enumerate_connected(0), DomainError);
  EXPECT_THROW(enumerate_connected(10), DomainError);
  EXPECT_EQ(enumerate_connected(1).size(), 1U);
}

}  // namespace
}  // namespace symbreak
