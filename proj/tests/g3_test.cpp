#include "pcolor/g3.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "pcolor/enumerate.hpp"
#include "pcolor/families.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/graph6.hpp"
#include "pcolor/packing.hpp"

namespace pcolor {
namespace {

TEST(RecognizeG3, AgreesWithTheSolverOnAllConnectedGraphsUpTo6) {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      bool is_three = chi_rho(g).value == 3;
      auto cert = recognize_g3(g);
      EXPECT_EQ(cert.has_value(), is_three) << to_graph6(g);
      if (cert) {
        EXPECT_TRUE(validate_certificate(g, *cert)) << to_graph6(g);
      }
    }
}

TEST(RecognizeG3, FrozenCertificateForTheTreeFixture) {
  Graph t = generate(FamilyId::parse("T"));
  auto cert = recognize_g3(t);
  ASSERT_TRUE(cert.has_value());
  // ids 0=d 1=b 2=y' 3=c 4=e 5=a; the spine is one subdivided multigraph
  // edge on each side of y', plus the leaf a on the V3 side.
  std::map<Vertex, PartLabel> expected{
      {0, PartLabel::V1}, {1, PartLabel::V2}, {2, PartLabel::V3},
      {3, PartLabel::V2}, {4, PartLabel::V1}, {5, PartLabel::V4}};
  EXPECT_EQ(cert->parts, expected);
  ASSERT_EQ(cert->multigraph_edges.size(), 2u);
  EXPECT_EQ(cert->multigraph_edges[0], (std::array<Vertex, 3>{0, 1, 2}));
  EXPECT_EQ(cert->multigraph_edges[1], (std::array<Vertex, 3>{4, 3, 2}));
  EXPECT_EQ(cert->to_text(),
            "0 V1\n1 V2\n2 V3\n3 V2\n4 V1\n5 V4\n");
}

TEST(RecognizeG3, FrozenCertificateForTriangleAndSquare) {
  auto k3 = recognize_g3(make_cycle(3));
  ASSERT_TRUE(k3.has_value());
  EXPECT_EQ(k3->parts,
            (std::map<Vertex, PartLabel>{{0, PartLabel::V3},
                                         {1, PartLabel::V5},
                                         {2, PartLabel::V5}}));
  EXPECT_TRUE(k3->multigraph_edges.empty());

  // C4 is a doubled multigraph edge: two parallel subdivision vertices.
  auto c4 = recognize_g3(make_cycle(4));
  ASSERT_TRUE(c4.has_value());
  EXPECT_EQ(c4->parts,
            (std::map<Vertex, PartLabel>{{0, PartLabel::V1},
                                         {1, PartLabel::V2},
                                         {2, PartLabel::V3},
                                         {3, PartLabel::V2}}));
  ASSERT_EQ(c4->multigraph_edges.size(), 2u);
  EXPECT_EQ(c4->multigraph_edges[0], (std::array<Vertex, 3>{0, 1, 2}));
  EXPECT_EQ(c4->multigraph_edges[1], (std::array<Vertex, 3>{0, 3, 2}));
}

TEST(RecognizeG3, LowColorGraphsAreRejectedNotMislabeled) {
  // Stars and short paths satisfy the raw part grammar (V1-V2-V3 or V0-V1)
  // but have chi_rho = 2; the recognizer must reject them.
  for (const char* g6 : {"@", "A_", "BW", "Ds_"}) {
    Graph g = parse_graph6(g6);
    EXPECT_FALSE(recognize_g3(g).has_value()) << g6;
  }
}

TEST(RecognizeG3, HighColorGraphsAreRejected) {
  EXPECT_FALSE(recognize_g3(make_complete(4)).has_value());
  EXPECT_FALSE(recognize_g3(make_cycle(5)).has_value());
  EXPECT_FALSE(recognize_g3(generate(FamilyId::parse("H3"))).has_value());
}

TEST(RecognizeG3, AcceptsTheTailedFixtures) {
  for (int n = 1; n <= 8; ++n) {
    auto cx = recognize_g3(generate(FamilyId{Family::X, n}));
    ASSERT_TRUE(cx.has_value()) << "X(" << n << ")";
    auto cy = recognize_g3(generate(FamilyId{Family::Y, n}));
    ASSERT_TRUE(cy.has_value()) << "Y(" << n << ")";
  }
}

TEST(RecognizeG3, PreconditionsAreEnforced) {
  EXPECT_THROW(recognize_g3(Graph(0)), error);
  EXPECT_THROW(recognize_g3(make_path(13)), error);
  EXPECT_THROW(recognize_g3(disjoint_union(make_path(2), make_path(2))), error);
}

TEST(RecognizeG3, DeterministicAcrossCalls) {
  Graph g = make_cycle(8);
  auto a = recognize_g3(g);
  auto b = recognize_g3(g);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->to_text(), b->to_text());
  EXPECT_EQ(a->multigraph_edges, b->multigraph_edges);
}

TEST(RecognizeG3, StableUnderRelabeling) {
  std::mt19937 rng(1234);
  for (int n = 4; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (chi_rho(g).value != 3) continue;
      std::vector<Vertex> pi(static_cast<size_t>(n));
      std::iota(pi.begin(), pi.end(), 0);
      std::shuffle(pi.begin(), pi.end(), rng);
      Graph h = relabel(g, pi);
      auto cert = recognize_g3(h);
      ASSERT_TRUE(cert.has_value()) << to_graph6(g);
      EXPECT_TRUE(validate_certificate(h, *cert)) << to_graph6(g);
    }
}

TEST(ValidateCertificate, RejectsTamperedParts) {
  Graph t = generate(FamilyId::parse("T"));
  auto cert = recognize_g3(t);
  ASSERT_TRUE(cert.has_value());
  ASSERT_TRUE(validate_certificate(t, *cert));
  {
    G3Certificate bad = *cert;
    bad.parts[5] = PartLabel::V0;  // leaf is on the V3 side, V0 needs V1
    EXPECT_FALSE(validate_certificate(t, bad));
  }
  {
    G3Certificate bad = *cert;  // swap the sides, keep everything else
    for (auto& [v, p] : bad.parts) {
      if (p == PartLabel::V1) p = PartLabel::V3;
      else if (p == PartLabel::V3) p = PartLabel::V1;
    }
    // each V2 still sees one V1 and one V3, but the V4 leaf hangs off a V1
    EXPECT_FALSE(validate_certificate(t, bad));
  }
  {
    G3Certificate bad = *cert;
    bad.multigraph_edges.pop_back();  // drop a recorded subdivision triple
    EXPECT_FALSE(validate_certificate(t, bad));
  }
  {
    G3Certificate bad = *cert;
    bad.parts.erase(5);  // label set must cover V(G) exactly
    EXPECT_THROW(validate_certificate(t, bad), error);
    bad.parts[5] = PartLabel::V4;
    bad.parts[6] = PartLabel::V0;
    EXPECT_THROW(validate_certificate(t, bad), error);
  }
}

TEST(ValidateCertificate, RecordedTriplesMatchTheGraph) {
  for (const Graph& g : enumerate_connected(6)) {
    auto cert = recognize_g3(g);
    if (!cert) continue;
    for (const auto& [v1, mid, v3] : cert->multigraph_edges) {
      EXPECT_EQ(cert->parts.at(v1), PartLabel::V1);
      EXPECT_EQ(cert->parts.at(mid), PartLabel::V2);
      EXPECT_EQ(cert->parts.at(v3), PartLabel::V3);
      EXPECT_TRUE(g.has_edge(v1, mid));
      EXPECT_TRUE(g.has_edge(mid, v3));
    }
    // one triple per subdivision vertex
    size_t v2_count = 0;
    for (const auto& [v, p] : cert->parts)
      if (p == PartLabel::V2) ++v2_count;
    EXPECT_EQ(cert->multigraph_edges.size(), v2_count);
  }
}

TEST(PartLabels, NamesAndPairTable) {
  EXPECT_EQ(to_string(PartLabel::V0), "V0");
  EXPECT_EQ(to_string(PartLabel::V7), "V7");
  // the table is symmetric and sparse
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      EXPECT_EQ(detail::g3_pair_allowed(static_cast<PartLabel>(a),
                                        static_cast<PartLabel>(b)),
                detail::g3_pair_allowed(static_cast<PartLabel>(b),
                                        static_cast<PartLabel>(a)));
  EXPECT_TRUE(detail::g3_pair_allowed(PartLabel::V1, PartLabel::V2));
  EXPECT_TRUE(detail::g3_pair_allowed(PartLabel::V5, PartLabel::V5));
  EXPECT_FALSE(detail::g3_pair_allowed(PartLabel::V1, PartLabel::V3));
  EXPECT_FALSE(detail::g3_pair_allowed(PartLabel::V0, PartLabel::V4));
}

}  // namespace
}  // namespace pcolor
