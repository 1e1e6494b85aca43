#ifndef STICKFORGE_TEST_ORACLES_HPP
#define STICKFORGE_TEST_ORACLES_HPP

// Brute-force reference computations, written independently of the library.

#include <numeric>
#include <vector>

#include "stickforge/stickforge.hpp"

namespace oracles {

using stickforge::LaurentPoly;
using stickforge::PDCode;

inline int root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// State sum over all 2^n smoothings.
inline LaurentPoly naive_bracket(const PDCode& p) {
  const int n = p.crossing_count();
  LaurentPoly total;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::vector<int> parent(p.arc_count + 1);
    std::iota(parent.begin(), parent.end(), 0);
    int a_count = 0;
    for (int k = 0; k < n; ++k) {
      const auto& c = p.crossings[k];
      if ((s >> k) & 1U) {
        ++a_count;
        parent[root(parent, c[0])] = root(parent, c[1]);
        parent[root(parent, c[2])] = root(parent, c[3]);
      } else {
        parent[root(parent, c[0])] = root(parent, c[3]);
        parent[root(parent, c[1])] = root(parent, c[2]);
      }
    }
    int loops = 0;
    for (int l = 1; l <= p.arc_count; ++l) loops += root(parent, l) == l;
    LaurentPoly term = LaurentPoly::monomial(2 * a_count - n);
    for (int i = 1; i < loops; ++i) term = term * (LaurentPoly{{-2, -1}, {2, -1}});
    total += term;
  }
  return total;
}

/// Counts colorings by trying every labelling of the arcs.
inline std::uint64_t naive_colorings(const PDCode& p, int q) {
  const int arcs = p.arc_count;
  if (arcs == 0) return static_cast<std::uint64_t>(q);
  std::vector<int> col(arcs + 1, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& c : p.crossings)
      if (((2 * col[c[1]] - col[c[0]] - col[c[2]]) % q + q) % q != 0 || col[c[1]] != col[c[3]]) ok = false;
    for (const auto& v : p.vertices)
      for (int l : v)
        if (col[l] != col[v[0]]) ok = false;
    count += ok;
    int i = 1;
    while (i <= arcs && ++col[i] == q) col[i++] = 0;
    if (i > arcs) break;
  }
  return count;
}

}  // namespace oracles

#endif  // STICKFORGE_TEST_ORACLES_HPP
