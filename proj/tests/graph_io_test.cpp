#include "symbreak/graph_io.hpp"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "symbreak/errors.hpp"

namespace symbreak {
namespace {

TEST(Graph6Test, SingletonEncodesAsAt) {
  // N(1) = 1 + 63 = '@', no bit section.
  EXPECT_EQ(to_graph6(complete_graph(1)), "@");
  EXPECT_EQ(parse_graph6("@"), complete_graph(1));
}

TEST(Graph6Test, HandEncodedRecords) {
  // P_3 = 0-1-2: bits x(0,1)=1 x(0,2)=0 x(1,2)=1 -> 101000 = 40 -> 'g'.
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  // K_4: six ones -> 63 + 63 = '~'.
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
}

TEST(Graph6Test, KnownRecordRoundTrips) {
  Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(to_graph6(g), "D?{");
  // '?' = 000000 covers x(0,1)..x(2,3); '{' = 111100 sets x(0,4)..x(3,4).
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.degree(4), 4);
}

TEST(Graph6Test, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);      // truncated
  EXPECT_THROW(parse_graph6("D?{{"), ParseError);    // trailing
  EXPECT_THROW(parse_graph6("D? {"), ParseError);    // byte out of range
  EXPECT_THROW(parse_graph6("Bh"), ParseError);      // padding bit set
  EXPECT_THROW(parse_graph6("?"), ParseError);       // zero vertices
  try {
    parse_graph6("D?{{");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 3U);
  }
}

TEST(Graph6Test, MultiByteHeader) {
  Graph g = cycle_graph(64);
  const std::string record = to_graph6(g);
  EXPECT_EQ(record[0], '~');
  EXPECT_EQ(parse_graph6(record), g);
  // A small graph written with the long header is still accepted.
  EXPECT_EQ(parse_graph6("~??Bg"), path_graph(3));
  EXPECT_THROW(parse_graph6("~?@@"), CapabilityError);  // n = 65
}

TEST(Graph6Test, HeaderPrefixAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bg\n"), path_graph(3));
}

TEST(Graph6Test, RandomRoundTrip) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() & 1U) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    const std::string record = to_graph6(g);
    ASSERT_EQ(parse_graph6(record), g);
    ASSERT_EQ(to_graph6(parse_graph6(record)), record);
  }
}

TEST(EdgeListTest, ParseAndEmit) {
  const std::string text = "# a 4-cycle\n4 4\n0 1\n1 2\n# comment\n2 3\n3 0\n";
  Graph g = parse_edge_list(text);
  EXPECT_EQ(g, cycle_graph(4));
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("3 2\n0 1\n1 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("x\n"), ParseError);
}

TEST(ReadGraphsTest, DetectsFormat) {
  std::istringstream g6("Bg\nC~\n\n@\n");
  auto many = read_graphs(g6);
  ASSERT_EQ(many.size(), 3U);
  EXPECT_EQ(many[1].graph, complete_graph(4));
  EXPECT_EQ(many[2].line, 4);

  std::istringstream el("3 2\n0 1\n1 2\n");
  auto one = read_graphs(el);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0].graph, path_graph(3));

  std::istringstream bad("Bg\nzz\n");
  try {
    read_graphs(bad);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

}  // namespace
}  // namespace symbreak
