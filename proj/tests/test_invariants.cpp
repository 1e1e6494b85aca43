#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace stickforge;
using testing_support::data_path;
using testing_support::read_text;

namespace {

const char* kTrefoil = "[(1,5,2,4),(3,1,4,6),(5,3,6,2)]";
const char* kFigureEight = "[(4,2,5,1),(8,6,1,5),(6,3,7,4),(2,7,3,8)]";

LaurentPoly from_vector(const std::vector<long long>& v, int scale) {
  LaurentPoly p;
  for (std::size_t i = 2; i < v.size(); ++i) p.add_term(scale * static_cast<int>(v[0] + static_cast<long long>(i) - 2), v[i]);
  return p;
}

std::vector<long long> parse_vector(const std::string& s) {
  std::vector<long long> out;
  std::string tok;
  for (char c : s) {
    if (c == '[' || c == ']' || c == '"') continue;
    if (c == ',') {
      out.push_back(std::stoll(tok));
      tok.clear();
    } else {
      tok += c;
    }
  }
  if (!tok.empty()) out.push_back(std::stoll(tok));
  return out;
}

}  // namespace

TEST(Invariants, Unknot) {
  const PDCode u;
  EXPECT_EQ(kauffman_bracket(u), LaurentPoly(1));
  EXPECT_EQ(jones_in_t(u), LaurentPoly(1));
  EXPECT_EQ(alexander(u), LaurentPoly(1));
  EXPECT_EQ(determinant(u), 1);
  EXPECT_EQ(fox_colorings(u, 3), 3U);
  EXPECT_FALSE(tricolorable(u));
}

TEST(Invariants, KinkBracket) {
  const auto a = kauffman_bracket(parse_pd("[(1,1,2,2)]"));
  const auto b = kauffman_bracket(parse_pd("[(1,2,2,1)]"));
  EXPECT_TRUE(a == LaurentPoly::monomial(3, -1) || a == LaurentPoly::monomial(-3, -1)) << a.to_string();
  EXPECT_EQ(b, a.substitute_power(-1));
}

TEST(Invariants, KinksAreTrivial) {
  for (const char* text : {"[(1,1,2,2)]", "[(1,2,2,1)]"}) {
    const auto p = parse_pd(text);
    EXPECT_EQ(jones_polynomial(p), LaurentPoly(1)) << text;
    EXPECT_EQ(alexander(p), LaurentPoly(1)) << text;
  }
}

TEST(Invariants, Trefoil) {
  const auto p = parse_pd(kTrefoil);
  const auto j = jones_in_t(p);
  const LaurentPoly right{{1, 1}, {3, 1}, {4, -1}};
  EXPECT_TRUE(j == right || j == right.substitute_power(-1)) << j.to_string("t");
  EXPECT_EQ(alexander(p), (LaurentPoly{{-1, 1}, {0, -1}, {1, 1}}));
  EXPECT_EQ(determinant(p), 3);
  EXPECT_EQ(fox_colorings(p, 3), 9U);
  EXPECT_TRUE(tricolorable(p));
  EXPECT_EQ(jones_fingerprint(p), jones_fingerprint(mirror(p)));
  EXPECT_NE(jones_polynomial(p), jones_polynomial(mirror(p)));
}

TEST(Invariants, FigureEight) {
  const auto p = parse_pd(kFigureEight);
  EXPECT_EQ(jones_in_t(p), (LaurentPoly{{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}}));
  EXPECT_EQ(jones_polynomial(p), jones_polynomial(mirror(p)));
  EXPECT_EQ(determinant(p), 5);
  EXPECT_FALSE(tricolorable(p));
  EXPECT_EQ(fox_colorings(p, 5), 25U);
}

TEST(Invariants, ColoringArguments) {
  const auto p = parse_pd(kTrefoil);
  EXPECT_THROW(fox_colorings(p, 4), std::invalid_argument);
  EXPECT_THROW(fox_colorings(p, 1), std::invalid_argument);
  PDCode theta;
  theta.vertices = {{1, 2, 3}, {3, 2, 1}};
  theta.arc_count = 3;
  EXPECT_THROW(fox_colorings(theta, 3), std::invalid_argument);
}

TEST(Invariants, AgreesWithReferenceTable) {
  std::map<std::string, std::string> pds;
  {
    std::istringstream in(read_text(data_path("knots.csv")));
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      const auto cells = catalog_detail::split_csv_line(line);
      pds[cells[0]] = cells[4];
    }
  }
  std::istringstream in(read_text(STICKFORGE_TEST_DATA_DIR "/knotinfo_invariants.csv"));
  std::string line;
  std::getline(in, line);
  int checked = 0;
  while (std::getline(in, line)) {
    const auto cells = catalog_detail::split_csv_line(line);
    if (cells[0] == "0_1") continue;
    ASSERT_TRUE(pds.count(cells[0])) << cells[0];
    const auto p = parse_pd(pds[cells[0]]);
    const auto jones = from_vector(parse_vector(cells[1]), 1);
    const auto alex = normalize_alexander(from_vector(parse_vector(cells[2]), 1));
    const auto j = jones_in_t(p);
    EXPECT_TRUE(j == jones || j.substitute_power(-1) == jones) << cells[0];
    EXPECT_EQ(alexander(p), alex) << cells[0];
    EXPECT_EQ(determinant(p), std::stoll(cells[3])) << cells[0];
    ++checked;
  }
  EXPECT_EQ(checked, 249);
}

TEST(Invariants, BracketMatchesStateSum) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const auto p = testing_support::random_knot_pd(rng, 7, 9);
    EXPECT_EQ(kauffman_bracket(p), oracles::naive_bracket(p)) << emit_pd(p);
  }
  for (const char* f : {"8_19.pd", "9_26.pd"}) {
    const auto p = testing_support::fixture_pd(f);
    EXPECT_EQ(kauffman_bracket(p), oracles::naive_bracket(p)) << f;
  }
}

TEST(Invariants, ColoringsMatchBruteForce) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    const auto p = testing_support::random_knot_pd(rng, 6, 5);
    EXPECT_EQ(fox_colorings(p, 3), oracles::naive_colorings(p, 3)) << emit_pd(p);
    if (p.arc_count <= 8) EXPECT_EQ(fox_colorings(p, 5), oracles::naive_colorings(p, 5)) << emit_pd(p);
  }
}

TEST(Invariants, BouquetColoringsMatchBruteForce) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> coord(0, 10);
  const auto g = GraphType::bouquet(3, 3);
  int checked = 0;
  while (checked < 40) {
    std::vector<GridPoint> v(g.vertex_count());
    for (auto& q : v) q = GridPoint{coord(rng), coord(rng)};
    if (!analyze_layout(g, v)) continue;
    const auto d = build_diagram(g, v);
    if (d.crossing_count() > 5) continue;
    std::vector<int> bits(d.crossing_count());
    for (auto& b : bits) b = static_cast<int>(rng() & 1U);
    const auto p = assign_crossings(d, bits);
    EXPECT_EQ(fox_colorings(p, 3), oracles::naive_colorings(p, 3)) << emit_pd(p);
    ++checked;
  }
}
