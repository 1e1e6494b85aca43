// One PASS/FAIL line per acceptance criterion, with time limits.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace stickforge;
using testing_support::data_path;
using testing_support::fixture_pd;
using testing_support::full_catalog;
using Names = std::set<std::string>;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimit1 = 60, kLimit2 = 600, kLimit3 = 1, kLimit4 = 60, kLimit5 = 120, kLimit6 = 1800, kLimit7 = 900,
                 kLimit8 = 900, kLimit9 = 600;

// Fingerprint collisions that the sweeps hit, settled by simplifying a sample
// diagram with an independent tool: each label is the low-crossing member.
const std::map<std::string, std::string> kResolvedAmbiguities = {
    {"5_1|10_132", "5_1"}, {"8_8|10_129", "8_8"}, {"8_16|10_156", "8_16"}};

Names resolved_names(const SweepResult& r) {
  SweepResult copy;
  for (const auto& [label, n] : r.counts) {
    const auto it = kResolvedAmbiguities.find(label);
    copy.counts[it == kResolvedAmbiguities.end() ? label : it->second] += n;
  }
  return copy.names();
}

std::string show(const Names& s) {
  std::string out = "{";
  for (const auto& n : s) out += (out.size() > 1 ? " " : "") + n;
  return out + "}";
}

Names minus(const Names& a, const Names& b) {
  Names out;
  for (const auto& n : a)
    if (!b.count(n)) out.insert(n);
  return out;
}

Names split(const std::string& text) {
  Names out;
  std::stringstream ss(text);
  std::string n;
  while (ss >> n) out.insert(n);
  return out;
}

int crossing_number(const std::string& name) { return std::stoi(name.substr(0, name.find('_'))); }

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < limit;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line.precision(3);
  line << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << secs << " s, limit " << limit << " s";
  if (!in_time) line << ", too slow";
  line << ")";
  if (!o.detail.empty()) line << " " << o.detail;
  std::cout << line.str() << std::endl;
}

/// Union of the knot names over all crossing assignments of every shadow.
Names classify(const std::vector<ShadowRecord>& shadows) {
  Names all;
  for (const auto& r : shadows) {
    const auto names = resolved_names(sweep_assignments(r.shadow, full_catalog()));
    all.insert(names.begin(), names.end());
  }
  return all;
}

Outcome expect_names(const Names& got, const Names& want) {
  const Names missing = minus(want, got), extra = minus(got, want);
  if (missing.empty() && extra.empty()) return {true, show(got)};
  return {false, "missing " + show(missing) + " extra " + show(extra)};
}

EnumerationOptions at_grid(int g) {
  EnumerationOptions o;
  o.grid = g;
  return o;
}

}  // namespace

int main() {
  full_catalog();

  criterion(1, "5-stick knots are exactly 3_1 and 5_1", kLimit1, [] {
    auto got = classify(enumerate_shadows(GraphType::cycle(5), at_grid(8)));
    got.erase("0_1");
    return expect_names(got, {"3_1", "5_1"});
  });

  criterion(2, "6-stick knot union and max crossings 7", kLimit2, [] {
    const auto shadows = enumerate_shadows(GraphType::cycle(6), at_grid(12));
    auto got = classify(shadows);
    got.erase("0_1");
    auto o = expect_names(got, {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "7_4"});
    const int m = max_crossings(shadows);
    o.detail += " max crossings " + std::to_string(m);
    o.ok = o.ok && m == 7;
    return o;
  });

  criterion(3, "appendix bound triples and LB1 column", kLimit3, [] {
    const auto text = testing_support::read_text(data_path("fixtures/appendix_bounds.csv"));
    std::stringstream in(text);
    std::string line;
    std::getline(in, line);
    int rows = 0, bad = 0;
    std::string first_bad;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      ++rows;
      std::stringstream ls(line);
      std::string name, a, b, c;
      std::getline(ls, name, ',');
      std::getline(ls, a, ',');
      std::getline(ls, b, ',');
      std::getline(ls, c, ',');
      const auto r = bounds_report(name, full_catalog());
      const bool ok = r.lb1 == std::stoi(a) && r.lb2 == std::stoi(b) && r.ub == std::stoi(c) &&
                      lb1(crossing_number(name)) == std::stoi(a);
      if (!ok && bad++ == 0) first_bad = name;
    }
    return Outcome{bad == 0 && rows > 0, std::to_string(rows) + " rows" + (bad ? ", first mismatch " + first_bad : "")};
  });

  criterion(4, "8_19 fixture sweep, >=8-crossing slice", kLimit4, [] {
    const auto r = sweep_assignments(fixture_pd("8_19.pd"), full_catalog());
    Names slice;
    for (const auto& n : resolved_names(r))
      if (crossing_number(n) >= 8) slice.insert(n);
    auto o = expect_names(slice, split("8_10 8_16 8_19 8_21 10_100 10_124 10_125 10_141 10_143 10_155"));
    o.ok = o.ok && r.total == 1024;
    o.detail += " assignments " + std::to_string(r.total);
    return o;
  });

  criterion(5, "9_26 fixture sweep", kLimit5, [] {
    const auto r = sweep_assignments(fixture_pd("9_26.pd"), full_catalog());
    auto o = expect_names(resolved_names(r), split("0_1 3_1 4_1 5_1 5_2 6_1 6_2 6_3 7_1 7_2 7_3 7_5 7_6 7_7 8_2 8_4 8_6 8_7 8_8 "
                                                   "8_9 8_14 9_1 9_6 9_7 9_9 9_20 9_23 9_26 10_9 10_22 10_32"));
    o.ok = o.ok && r.total == 2048;
    o.detail += " assignments " + std::to_string(r.total);
    return o;
  });

  criterion(6, "14-crossing fixture sweep against the <=10 list", kLimit6, [] {
    SweepOptions opt;
    opt.jobs = 4;
    const auto r = sweep_assignments(fixture_pd("max14.pd"), full_catalog(), opt);
    const auto want = split(
        "0_1 3_1 4_1 5_1 5_2 6_2 6_3 7_1 7_3 7_5 8_2 8_5 8_7 8_9 8_10 8_16 8_17 8_18 8_19 8_20 8_21 9_9 9_16 10_9 10_17 10_48 "
        "10_64 10_79 10_82 10_85 10_91 10_94 10_99 10_100 10_104 10_106 10_109 10_112 10_116 10_118 10_124 10_127 10_139 "
        "10_141 10_143 10_148 10_149 10_152 10_155 10_157 10_159 10_161");
    auto o = expect_names(resolved_names(r), want);
    o.ok = o.ok && r.total == 16384;
    o.detail += " assignments " + std::to_string(r.total) + ", unknown " + std::to_string(r.unknown());
    return o;
  });

  criterion(7, "bouquet types, 7-stick bouquet ceiling, 6^k_19 tricolorable", kLimit7, [] {
    Names types;
    bool all_typed = true;
    for (const auto& r : enumerate_shadows(GraphType::bouquet(3, 3), at_grid(8))) {
      const auto t = classify_bouquet6(r.diagram());
      if (t) types.insert(to_string(*t));
      else all_typed = false;
    }
    const int m = max_crossings(GraphType::bouquet(3, 4), at_grid(16));
    const bool tri = tricolorable(fixture_pd("6k19.pd"));
    return Outcome{all_typed && types == Names{"B0", "B1", "B2", "B3"} && m <= 7 && tri,
                   "types " + show(types) + (all_typed ? "" : " (untyped shadow)") + ", bouquet(3,4) max crossings " +
                       std::to_string(m) + ", tricolorable " + (tri ? "yes" : "no")};
  });

  criterion(8, "Kinoshita constituents and theta(2,2,2) crossings", kLimit8, [] {
    int unknots = 0;
    const auto parts = constituent_knots(fixture_pd("kinoshita.pd"));
    for (const auto& k : parts)
      if (identify(k, full_catalog()).label() == "0_1") ++unknots;
    const int m = max_crossings(GraphType::theta(2, 2, 2), at_grid(12));
    return Outcome{parts.size() == 3 && unknots == 3 && m < 5,
                   std::to_string(unknots) + " of " + std::to_string(parts.size()) + " constituents unknotted, theta(2,2,2) max crossings " +
                       std::to_string(m)};
  });

  criterion(9, "property suites", kLimit9, [] {
    std::mt19937_64 rng(9);
    int bad = 0;
    std::string why;
    auto fail = [&](const std::string& what) {
      if (bad++ == 0) why = what;
    };
    for (const auto& r : full_catalog().records()) {
      if (r.crossing_number > 8) continue;
      if (kauffman_bracket(r.reference_pd) != oracles::naive_bracket(r.reference_pd)) fail("bracket " + r.name);
      if (tricolorable(r.reference_pd) != (determinant(r.reference_pd) % 3 == 0)) fail("tricolor " + r.name);
    }
    for (int i = 0; i < 1000; ++i) {
      const auto p = testing_support::random_knot_pd(rng, 8, 8);
      if (kauffman_bracket(p) != oracles::naive_bracket(p)) fail("bracket " + emit_pd(p));
      if (jones_polynomial(reduce_knot(p)) != jones_polynomial(p)) fail("jones " + emit_pd(p));
    }
    for (int n = 3; n <= 20; ++n) {
      DegreeProfile dp;
      dp.entries[2] = n;
      if (crossing_ceiling(dp, n) != n * (n - 3) / 2) fail("ceiling " + std::to_string(n));
    }
    return Outcome{bad == 0, bad ? std::to_string(bad) + " violations, first " + why : ""};
  });

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " of 9 criteria failed" : std::string("acceptance: all 9 criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
