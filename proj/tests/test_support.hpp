#ifndef STICKFORGE_TEST_SUPPORT_HPP
#define STICKFORGE_TEST_SUPPORT_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stickforge/stickforge.hpp"

namespace testing_support {

inline std::string data_path(const std::string& rel) { return std::string(STICKFORGE_DATA_DIR) + "/" + rel; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline stickforge::PDCode fixture_pd(const std::string& name) { return stickforge::parse_pd(read_text(data_path("fixtures/" + name))); }

/// The bundled table, built once per process.
inline const stickforge::Catalog& full_catalog() {
  static const stickforge::Catalog c = stickforge::build_catalog(data_path("knots.csv"));
  return c;
}

/// Random knot diagram: a random polygon on a small grid with random crossings.
inline stickforge::PDCode random_knot_pd(std::mt19937_64& rng, int max_sticks, int max_crossings) {
  using namespace stickforge;
  std::uniform_int_distribution<int> sticks(3, max_sticks);
  std::uniform_int_distribution<std::int64_t> coord(0, 20);
  while (true) {
    const auto g = GraphType::cycle(sticks(rng));
    std::vector<GridPoint> v(g.vertex_count());
    for (auto& p : v) p = GridPoint{coord(rng), coord(rng)};
    if (!analyze_layout(g, v)) continue;
    const auto d = build_diagram(g, v);
    if (d.crossing_count() > max_crossings) continue;
    std::vector<int> bits(d.crossing_count());
    for (auto& b : bits) b = static_cast<int>(rng() & 1U);
    return assign_crossings(d, bits);
  }
}

}  // namespace testing_support

#endif  // STICKFORGE_TEST_SUPPORT_HPP
