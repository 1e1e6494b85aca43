#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.hpp"

using namespace stickforge;
using testing_support::fixture_pd;

namespace {

const char* kTrefoil = "[(1,5,2,4),(3,1,4,6),(5,3,6,2)]";

int euler_characteristic(const PDCode& p) {
  const int nodes = p.crossing_count() + static_cast<int>(p.vertices.size());
  return nodes - p.arc_count + static_cast<int>(faces(p).size());
}

}  // namespace

TEST(PDCode, ParsesPaperFixtures) {
  const auto p819 = fixture_pd("8_19.pd");
  EXPECT_EQ(p819.crossing_count(), 10);
  EXPECT_EQ(p819.arc_count, 20);
  const auto p14 = fixture_pd("max14.pd");
  EXPECT_EQ(p14.crossing_count(), 14);
  EXPECT_EQ(p14.arc_count, 28);
  EXPECT_EQ(fixture_pd("9_26.pd").crossing_count(), 11);
}

TEST(PDCode, AcceptsBracketVariants) {
  const auto a = parse_pd(kTrefoil);
  EXPECT_EQ(parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]"), a);
  EXPECT_EQ(parse_pd("(1,5,2,4),(3,1,4,6),(5,3,6,2)"), a);
  EXPECT_EQ(parse_pd("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]"), a);
  EXPECT_EQ(parse_pd("[]").crossing_count(), 0);
}

TEST(PDCode, RejectsMalformedText) {
  EXPECT_THROW(parse_pd("[(1,2,2,1)"), MalformedPD);
  EXPECT_THROW(parse_pd("[(1,2,2)]"), MalformedPD);       // a bare triple is a vertex; arcs then unbalanced
  EXPECT_THROW(parse_pd("[(1,2,3,4,5)]"), MalformedPD);   // arity
  EXPECT_THROW(parse_pd("[(1,2,2,3)]"), MalformedPD);     // labels 1 and 3 appear once
  EXPECT_THROW(parse_pd("[(1,2,x,1)]"), MalformedPD);     // non-integer token
}

TEST(PDCode, EmitRoundTrips) {
  const auto p = parse_pd(kTrefoil);
  EXPECT_EQ(emit_pd(p), "[(1,5,2,4),(3,1,4,6),(5,3,6,2)]");
  EXPECT_EQ(parse_pd(emit_pd(p)), p);
}

TEST(PDCode, KinkSigns) {
  EXPECT_EQ(crossing_signs(parse_pd("[(1,1,2,2)]")), std::vector<int>{+1});
  EXPECT_EQ(crossing_signs(parse_pd("[(1,2,2,1)]")), std::vector<int>{-1});
}

TEST(PDCode, TrefoilWritheAndMirror) {
  const auto p = parse_pd(kTrefoil);
  EXPECT_EQ(std::abs(writhe(p)), 3);
  EXPECT_EQ(writhe(mirror(p)), -writhe(p));
  EXPECT_EQ(mirror(mirror(p)), p);
}

TEST(PDCode, SwitchingTwiceRestores) {
  auto p = fixture_pd("8_19.pd");
  const auto orig = p;
  const auto signs = crossing_signs(p);
  switch_crossing(p, 4, signs[4]);
  EXPECT_EQ(crossing_signs(p)[4], -signs[4]);
  switch_crossing(p, 4, -signs[4]);
  EXPECT_EQ(p, orig);
}

TEST(PDCode, RelabelKeepsTheDiagram) {
  const auto p = fixture_pd("9_26.pd");
  const auto r = relabel_knot(p);
  EXPECT_EQ(r.arc_count, p.arc_count);
  EXPECT_EQ(crossing_signs(r), crossing_signs(p));
  EXPECT_EQ(relabel_knot(r), r);
  for (const auto& t : r.crossings) EXPECT_EQ((t[2] - t[0] + r.arc_count) % r.arc_count, 1 % r.arc_count);
}

TEST(PDCode, FaceCountsSatisfyEuler) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto p = testing_support::random_knot_pd(rng, 8, 14);
    if (p.crossing_count() == 0) continue;
    EXPECT_EQ(euler_characteristic(p), 2) << emit_pd(p);
  }
  EXPECT_EQ(euler_characteristic(fixture_pd("max14.pd")), 2);
}

TEST(PDCode, GraphTraversal) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(0, 12);
  int checked = 0;
  for (const auto& g : {GraphType::bouquet(3, 3), GraphType::theta(2, 2, 2)}) {
    for (int it = 0; it < 400; ++it) {
      std::vector<GridPoint> v(g.vertex_count());
      for (auto& q : v) q = GridPoint{coord(rng), coord(rng)};
      if (!analyze_layout(g, v)) continue;
      const auto d = build_diagram(g, v);
      const auto p = assign_crossings(d, std::vector<int>(d.crossing_count(), 1));
      ASSERT_FALSE(p.is_knot());
      EXPECT_EQ(trace_graph(p).size(), g.kind() == GraphType::Kind::Bouquet ? 2U : 3U);
      EXPECT_EQ(euler_characteristic(p), 2) << emit_pd(p);
      EXPECT_EQ(parse_pd(emit_pd(p)), p);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}
