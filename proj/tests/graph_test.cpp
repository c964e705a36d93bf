#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gra/canonical.hpp"
#include "gra/error.hpp"
#include "gra/graph.hpp"

namespace gra {
namespace {

using namespace gra::testing;

TEST(GraphTest, ParsesTriangleInListedOrder) {
  const Graph g = parse_graph("3: (1,2),(1,3),(2,3)");
  EXPECT_EQ(g, triangle());
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(GraphTest, NormalizesPairWithoutMovingIt) {
  const Graph g = parse_graph("2: (2,1)");
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));

  const Graph h = parse_graph("3: (3,2), (1,2)");
  EXPECT_EQ(h.edge(0), (Edge{1, 2}));
  EXPECT_EQ(h.edge(1), (Edge{0, 1}));
}

TEST(GraphTest, AcceptsOptionalSpaces) {
  EXPECT_EQ(parse_graph("  3:(1,2),(1,3),   (2,3) "), triangle());
  EXPECT_EQ(parse_graph("3: (1,2), (1,3), (2,3)"), triangle());
}

TEST(GraphTest, RejectsDuplicateEdge) {
  EXPECT_THROW(parse_graph("3: (1,2),(1,2)"), InvariantError);
  EXPECT_THROW(parse_graph("3: (1,2),(2,1)"), InvariantError);
}

TEST(GraphTest, RejectsLoopsAndRange) {
  EXPECT_THROW(parse_graph("3: (2,2)"), InvariantError);
  EXPECT_THROW(parse_graph("3: (1,4)"), InvariantError);
  EXPECT_THROW(parse_graph("3: (0,1)"), InvariantError);
  EXPECT_THROW(parse_graph("65: (1,2)"), InvariantError);
  EXPECT_THROW(parse_graph("0: (1,2)"), InvariantError);
}

TEST(GraphTest, RejectsMalformedSyntax) {
  for (const char* bad : {"", "3", "3:", "3: (1,2", "3: (1,2),", "3: (1 2)", "3: (1,2) (2,3)", "x: (1,2)", "3: (1,2),(a,3)",
                          "3: [1,2]", "3: (1,2)x", "-3: (1,2)", "3: (1, 2)"}) {
    EXPECT_THROW(parse_graph(bad), ParseError) << bad;
  }
}

TEST(GraphTest, SerializesWithSingleSpaces) {
  EXPECT_EQ(serialize_graph(edge()), "2: (1,2)");
  EXPECT_EQ(serialize_graph(triangle()), "3: (1,2), (1,3), (2,3)");
  EXPECT_EQ(serialize_graph(k4_reversed()), "4: (3,4), (2,4), (2,3), (1,4), (1,3), (1,2)");
}

TEST(GraphTest, RoundTripsEnumeratedAndShuffledGraphs) {
  std::mt19937 rng(7);
  for (const Graph& g0 : enumerate_graphs_up_to(5)) {
    std::vector<std::size_t> order(g0.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const Graph g = permute_edges(g0, order);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
    EXPECT_EQ(serialize_graph(parse_graph(serialize_graph(g))), serialize_graph(g));
  }
}

TEST(GraphTest, ConstructorValidates) {
  EXPECT_THROW(Graph(3, std::vector<Edge>{}), InvariantError);
  EXPECT_THROW(Graph(0, {{0, 1}}), InvariantError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InvariantError);
  EXPECT_NO_THROW(Graph(5, {{0, 1}}));
}

TEST(GraphTest, DegreesAndAdjacency) {
  const Graph p = path3();
  EXPECT_EQ(p.degrees(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(p.incident_edges(1), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(p.has_edge(2, 1));
  EXPECT_FALSE(p.has_edge(0, 2));
  EXPECT_EQ(p.adjacency()[1], 0b101u);
}

TEST(GraphTest, Leaflessness) {
  EXPECT_FALSE(is_leafless(path3()));
  EXPECT_FALSE(is_leafless(edge()));
  EXPECT_TRUE(is_leafless(triangle()));
  EXPECT_TRUE(is_leafless(k4()));
  // An isolated vertex has degree zero.
  EXPECT_FALSE(is_leafless(Graph(4, {{0, 1}, {0, 2}, {1, 2}})));
}

TEST(GraphTest, Connectivity) {
  EXPECT_TRUE(is_connected(k4()));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_FALSE(is_connected(Graph(3, {{0, 1}})));
}

TEST(GraphTest, PermutationValidationAndAlgebra) {
  EXPECT_THROW(VertexPermutation({0, 0, 1}), InvariantError);
  EXPECT_THROW(VertexPermutation({0, 3, 1}), InvariantError);
  const VertexPermutation p({1, 2, 0});
  const VertexPermutation q({0, 2, 1});
  EXPECT_EQ(p.then(p.inverse()), VertexPermutation::identity(3));
  EXPECT_EQ(p.then(q)(0), q(p(0)));
  EXPECT_EQ(serialize_permutation(p), "2 3 1");
}

TEST(GraphTest, PermutationSign) {
  const std::vector<std::size_t> id{0, 1, 2, 3};
  const std::vector<std::size_t> swap{1, 0, 2, 3};
  const std::vector<std::size_t> cycle3{1, 2, 0, 3};
  const std::vector<std::size_t> cycle4{1, 2, 3, 0};
  EXPECT_EQ(permutation_sign(id), 1);
  EXPECT_EQ(permutation_sign(swap), -1);
  EXPECT_EQ(permutation_sign(cycle3), 1);
  EXPECT_EQ(permutation_sign(cycle4), -1);
}

TEST(GraphTest, RelabelAndPermuteEdgesKeepPositions) {
  const Graph r = relabel(path3(), VertexPermutation({2, 1, 0}));
  EXPECT_EQ(r.edge(0), (Edge{1, 2}));
  EXPECT_EQ(r.edge(1), (Edge{0, 1}));

  const std::vector<std::size_t> order{2, 0, 1};
  const Graph t = permute_edges(triangle(), order);
  EXPECT_EQ(serialize_graph(t), "3: (2,3), (1,2), (1,3)");
}

}  // namespace
}  // namespace gra
