#ifndef STICKFORGE_BOUNDS_HPP
#define STICKFORGE_BOUNDS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "graph_type.hpp"

namespace stickforge {

/// n_d: how many sticks share an endpoint with exactly d other sticks.
struct DegreeProfile {
  std::map<int, int> entries;

  int edge_count() const {
    int n = 0;
    for (const auto& [d, k] : entries) n += k;
    return n;
  }

  /// "4:4,2:3" means four sticks with 4 neighbours and three with 2.
  static DegreeProfile parse(const std::string& text) {
    DegreeProfile p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("profile entry '" + item + "' is not d:n");
      const int d = std::stoi(item.substr(0, colon));
      const int n = std::stoi(item.substr(colon + 1));
      if (d < 0 || n < 0) throw std::invalid_argument("profile entries must be non-negative");
      p.entries[d] += n;
    }
    if (p.entries.empty()) throw std::invalid_argument("empty degree profile");
    return p;
  }

  static DegreeProfile of(const GraphType& g) {
    DegreeProfile p;
    for (int d : g.adjacency_counts()) ++p.entries[d];
    return p;
  }
};

inline std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  std::int64_t r = 0;
  std::int64_t bit = std::int64_t{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit) {
    if (n >= r + bit) {
      n -= r + bit;
      r = (r >> 1) + bit;
    } else {
      r >>= 1;
    }
    bit >>= 2;
  }
  return r;
}

/// ceil((3 + sqrt(9 + 8 cr)) / 2): the smallest n with (2n - 3)^2 >= 9 + 8 cr.
inline int lb1(int cr) {
  if (cr < 0) throw std::invalid_argument("lb1: negative crossing number");
  const std::int64_t disc = 9 + 8 * static_cast<std::int64_t>(cr);
  std::int64_t m = isqrt(disc);
  if (m * m < disc) ++m;
  if (m % 2 == 0) ++m;
  return static_cast<int>((m + 3) / 2);
}

inline int crossing_ceiling(const DegreeProfile& p, int pl) {
  if (p.entries.empty()) throw std::invalid_argument("crossing_ceiling: empty profile");
  const int max_d = p.entries.rbegin()->first;
  if (pl < max_d + 1)
    throw std::invalid_argument("crossing_ceiling: pl " + std::to_string(pl) + " is below max degree + 1 = " + std::to_string(max_d + 1));
  std::int64_t sum = 0;
  for (const auto& [d, n] : p.entries) sum += static_cast<std::int64_t>(n) * (pl - d - 1);
  return static_cast<int>(sum / 2);
}

inline int crossing_ceiling(const GraphType& g) { return crossing_ceiling(DegreeProfile::of(g), g.total_sticks()); }

struct BoundsReport {
  std::string name;
  int crossing_number = 0;
  std::optional<int> lb1;
  std::optional<int> lb2;  // 2 * bridge + 1
  std::optional<int> ub;   // 3-D stick number - 1

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

inline BoundsReport bounds_report(const KnotRecord& r) {
  BoundsReport b;
  b.name = r.name;
  b.crossing_number = r.crossing_number;
  b.lb1 = lb1(r.crossing_number);
  if (r.bridge_number) b.lb2 = 2 * *r.bridge_number + 1;
  if (r.stick_number_3d) b.ub = *r.stick_number_3d - 1;
  return b;
}

inline BoundsReport bounds_report(const std::string& name, const Catalog& c) {
  const auto* r = c.find(name);
  if (!r) throw std::out_of_range("no catalog record for " + name);
  return bounds_report(*r);
}

/// Which knots each stick count is known to realize, from exhaustive shadow
/// classification. Knots absent from every listed level need more sticks
/// than the largest level.
struct StickClassification {
  std::map<int, std::set<std::string>> knots_by_sticks;

  /// Lower bound on the planar stick index implied by the classification.
  int floor(const std::string& name) const {
    if (name == "0_1") return 3;
    for (const auto& [n, knots] : knots_by_sticks)
      if (knots.count(name)) return n;
    return knots_by_sticks.empty() ? 3 : knots_by_sticks.rbegin()->first + 1;
  }
};

/// Classification of 5- and 6-stick knot diagrams (nontrivial knots only).
inline StickClassification default_classification() {
  StickClassification c;
  c.knots_by_sticks[5] = {"3_1", "5_1"};
  c.knots_by_sticks[6] = {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "7_4"};
  return c;
}

/// Planar stick index when the bounds settle it: the largest lower bound
/// meets a demonstrated diagram or the upper bound.
inline std::optional<int> pl_conclusion(const BoundsReport& r, std::optional<int> witness_sticks,
                                        std::optional<int> lower_floor = std::nullopt) {
  int lower = 0;
  for (const auto& v : {r.lb1, r.lb2, lower_floor})
    if (v) lower = std::max(lower, *v);
  if (witness_sticks && lower == *witness_sticks) return witness_sticks;
  if (r.ub && lower == *r.ub) return r.ub;
  return std::nullopt;
}

inline void write_bounds_csv(std::ostream& out, const std::vector<BoundsReport>& rows) {
  auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  out << "knot,lb1,lb2,ub\n";
  for (const auto& r : rows) out << r.name << "," << cell(r.lb1) << "," << cell(r.lb2) << "," << cell(r.ub) << "\n";
}

}  // namespace stickforge

#endif  // STICKFORGE_BOUNDS_HPP
