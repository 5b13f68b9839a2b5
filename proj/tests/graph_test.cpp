#include "pcolor/graph.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace pcolor {
namespace {

TEST(Graph, ConstructionAndAccessors) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.has_edge(1, 0));  // undirected
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(0, 0));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.neighbors(2), (std::vector<Vertex>{1, 3}));
}

TEST(Graph, EdgesAreNormalizedAndSorted) {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 3}}));
}

TEST(Graph, RejectsBadEdges) {
  Graph g(3, {{0, 1}});
  EXPECT_THROW(g.add_edge(1, 1), error);
  EXPECT_THROW(g.add_edge(0, 3), error);
  EXPECT_THROW(g.add_edge(-1, 0), error);
  EXPECT_THROW(g.add_edge(1, 0), error);  // duplicate in either orientation
  EXPECT_THROW(Graph(-1), error);
}

TEST(Graph, Labels) {
  Graph g(2, {{0, 1}});
  EXPECT_EQ(g.label(0), "0");  // default is the id
  g.set_label(0, "u");
  EXPECT_EQ(g.label(0), "u");
  EXPECT_THROW(g.label(5), error);
}

TEST(Graph, EqualityIsOrderAndEdges) {
  Graph a(3, {{0, 1}});
  Graph b(3, {{0, 1}});
  b.set_label(0, "x");  // labels are cosmetic
  EXPECT_EQ(a, b);
  EXPECT_NE(a, Graph(3, {{0, 2}}));
  EXPECT_NE(a, Graph(4, {{0, 1}}));
}

TEST(ParseEdgeList, HeaderCommentsAndBlankLines) {
  Graph g = parse_edge_list(
      "# a comment\n"
      "n 5\n"
      "\n"
      "0 1\n"
      "1 2\n"
      "3 4\n");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}}));
}

TEST(ParseEdgeList, InfersOrderWithoutHeader) {
  Graph g = parse_edge_list("0 1\n1 4\n");
  EXPECT_EQ(g.order(), 5);  // max id + 1
  EXPECT_EQ(g.size(), 2);
}

TEST(ParseEdgeList, Rejections) {
  EXPECT_THROW(parse_edge_list("0 0\n"), error);        // loop
  EXPECT_THROW(parse_edge_list("0 1\n1 0\n"), error);   // duplicate
  EXPECT_THROW(parse_edge_list("0 x\n"), error);        // non-integer
  EXPECT_THROW(parse_edge_list("0\n"), error);          // missing endpoint
  EXPECT_THROW(parse_edge_list("0 1 2\n"), error);      // extra token
  EXPECT_THROW(parse_edge_list("n 2\n0 5\n"), error);   // beyond declared order
}

TEST(DeleteVertex, CompactsIdsAndKeepsLabels) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  g.set_label(3, "z");
  Graph h = delete_vertex(g, 1);
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{1, 2}}));  // old 2-3 became 1-2
  EXPECT_EQ(h.label(2), "z");
  EXPECT_THROW(delete_vertex(g, 4), error);
}

TEST(DeleteEdge, RemovesExactlyOneEdge) {
  Graph g(3, {{0, 1}, {1, 2}});
  Graph h = delete_edge(g, {2, 1});  // orientation-insensitive
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_THROW(delete_edge(g, {0, 2}), error);  // not present
}

TEST(InducedSubgraph, KeepsSelectedVertices) {
  Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Graph h = induced_subgraph(g, {0, 1, 4});
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(Relabel, AppliesPermutation) {
  Graph g(3, {{0, 1}});
  Graph h = relabel(g, {2, 0, 1});  // v -> pi[v]
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 2}}));
  EXPECT_THROW(relabel(g, {0, 0, 1}), error);  // not a permutation
}

TEST(Components, SplitsAndDetectsConnectivity) {
  Graph g(5, {{0, 1}, {2, 3}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(comps[2], (std::vector<Vertex>{4}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(make_path(4)));
  EXPECT_TRUE(is_connected(Graph(1)));
}

TEST(Predicates, StarAndTriangle) {
  EXPECT_TRUE(is_star(make_star(3)));
  EXPECT_TRUE(is_star(make_path(2)));
  EXPECT_FALSE(is_star(make_path(4)));
  EXPECT_FALSE(is_star(make_cycle(3)));
  Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  EXPECT_TRUE(in_triangle(g, 0));
  EXPECT_FALSE(in_triangle(g, 3));
}

TEST(Constructors, ShapesHaveRightSizes) {
  EXPECT_EQ(make_path(1).size(), 0);
  EXPECT_EQ(make_path(6).size(), 5);
  EXPECT_EQ(make_cycle(3).size(), 3);
  EXPECT_EQ(make_cycle(8).size(), 8);
  EXPECT_THROW(make_cycle(2), error);
  EXPECT_EQ(make_complete(5).size(), 10);
  EXPECT_EQ(make_star(4).order(), 5);
  EXPECT_EQ(make_star(4).max_degree(), 4);
}

TEST(DisjointUnion, ShiftsSecondBlock) {
  Graph u = disjoint_union(make_path(2), make_cycle(3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.edges(),
            (std::vector<Edge>{{0, 1}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST(ToDot, EmitsVerticesEdgesAndColors) {
  Graph g(2, {{0, 1}});
  g.set_label(0, "u");
  std::string plain = to_dot(g);
  EXPECT_NE(plain.find("graph G {"), std::string::npos);
  EXPECT_NE(plain.find("label=\"u\""), std::string::npos);
  EXPECT_NE(plain.find("v0 -- v1;"), std::string::npos);
  std::map<Vertex, int> colors{{0, 1}, {1, 2}};
  std::string colored = to_dot(g, &colors);
  EXPECT_NE(colored.find("fillcolor"), std::string::npos);
  EXPECT_NE(colored.find("xlabel=\"2\""), std::string::npos);
}

}  // namespace
}  // namespace pcolor
