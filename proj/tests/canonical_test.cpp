#include "pcolor/canonical.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pcolor/enumerate.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/graph6.hpp"

namespace pcolor {
namespace {

std::vector<Vertex> identity_perm(int n) {
  std::vector<Vertex> pi(static_cast<size_t>(n));
  std::iota(pi.begin(), pi.end(), 0);
  return pi;
}

TEST(Canonical, FormMatchesItsOwnRelabeling) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      CanonicalForm form = canonical_form(g);
      Graph canon = relabel(g, form.relabeling);
      EXPECT_EQ(to_graph6(canon), form.bytes);
      EXPECT_EQ(canon.edges(), form.edges);
    }
}

// A canonical form must be constant across every relabeling of the graph.
TEST(Canonical, InvariantUnderAllPermutationsUpTo5) {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      std::string expected = canonical_form(g).bytes;
      std::vector<Vertex> pi = identity_perm(n);
      do {
        EXPECT_EQ(canonical_form(relabel(g, pi)).bytes, expected)
            << to_graph6(g);
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
  }
}

TEST(Canonical, InvariantUnderSampledPermutationsOn6And7) {
  std::mt19937 rng(424242);
  for (int n = 6; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      std::string expected = canonical_form(g).bytes;
      std::vector<Vertex> pi = identity_perm(n);
      for (int trial = 0; trial < 60; ++trial) {
        std::shuffle(pi.begin(), pi.end(), rng);
        EXPECT_EQ(canonical_form(relabel(g, pi)).bytes, expected)
            << to_graph6(g);
      }
    }
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphsExactly) {
  // Within one order, canonical bytes collide exactly on isomorphic graphs;
  // the enumeration yields pairwise non-isomorphic representatives.
  for (int n = 4; n <= 7; ++n) {
    auto graphs = enumerate_connected(n);
    std::set<std::string> forms;
    for (const Graph& g : graphs) forms.insert(canonical_form(g).bytes);
    EXPECT_EQ(forms.size(), graphs.size());
  }
}

TEST(AreIsomorphic, BasicPairs) {
  EXPECT_TRUE(are_isomorphic(make_path(4), relabel(make_path(4), {3, 1, 0, 2})));
  EXPECT_FALSE(are_isomorphic(make_path(4), make_star(3)));
  EXPECT_FALSE(are_isomorphic(make_path(4), make_path(5)));
  // Same degree sequence, different graphs: C6 vs two triangles.
  Graph two_triangles = disjoint_union(make_cycle(3), make_cycle(3));
  EXPECT_FALSE(are_isomorphic(make_cycle(6), two_triangles));
  EXPECT_TRUE(are_isomorphic(two_triangles,
                             relabel(two_triangles, {5, 3, 1, 4, 2, 0})));
}

TEST(AreIsomorphic, OrderCapIsEnforced) {
  EXPECT_THROW(canonical_form(make_path(13)), error);
  EXPECT_THROW(are_isomorphic(make_path(13), make_path(12)), error);
  EXPECT_NO_THROW(are_isomorphic(make_path(12), make_cycle(12)));
  // The unchecked variant exists for internal dedup beyond the cap.
  EXPECT_EQ(detail::canonical_form_unchecked(make_path(20)).bytes,
            detail::canonical_form_unchecked(
                relabel(make_path(20), [] {
                  std::vector<Vertex> pi(20);
                  std::iota(pi.rbegin(), pi.rend(), 0);
                  return pi;
                }()))
                .bytes);
}

TEST(FindIsomorphism, WitnessActuallyMapsEdges) {
  std::mt19937 rng(99);
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      std::vector<Vertex> pi = identity_perm(n);
      std::shuffle(pi.begin(), pi.end(), rng);
      Graph h = relabel(g, pi);
      auto map = find_isomorphism(g, h);
      ASSERT_TRUE(map.has_value()) << to_graph6(g);
      for (const Edge& e : g.edges())
        EXPECT_TRUE(h.has_edge((*map)[static_cast<size_t>(e.first)],
                               (*map)[static_cast<size_t>(e.second)]));
      std::set<Vertex> image(map->begin(), map->end());
      EXPECT_EQ(static_cast<int>(image.size()), n);  // bijective
    }
  }
  EXPECT_FALSE(find_isomorphism(make_path(4), make_star(3)).has_value());
}

TEST(Canonical, EquivalenceRelationOnRandomPairs) {
  // Reflexive + symmetric + transitive spot checks via three relabelings.
  std::mt19937 rng(31337);
  for (const Graph& g : enumerate_connected(6)) {
    std::vector<Vertex> pi = identity_perm(6);
    std::shuffle(pi.begin(), pi.end(), rng);
    Graph a = relabel(g, pi);
    std::shuffle(pi.begin(), pi.end(), rng);
    Graph b = relabel(g, pi);
    EXPECT_TRUE(are_isomorphic(g, g));
    EXPECT_TRUE(are_isomorphic(g, a));
    EXPECT_TRUE(are_isomorphic(a, g));
    EXPECT_TRUE(are_isomorphic(a, b));
  }
}

TEST(Canonical, HandlesEdgeCaseOrders) {
  EXPECT_EQ(canonical_form(Graph(0)).bytes, "?");
  EXPECT_EQ(canonical_form(Graph(1)).bytes, "@");
  EXPECT_EQ(canonical_form(Graph(3)).relabeling.size(), 3u);
}

}  // namespace
}  // namespace pcolor
