#ifndef STICKFORGE_INVARIANTS_HPP
#define STICKFORGE_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "pd_code.hpp"

namespace stickforge {

/// delta = -A^2 - A^-2, the value of a crossingless loop.
inline LaurentPoly loop_value() { return LaurentPoly{{-2, -1}, {2, -1}}; }

/// Kauffman bracket <p> in A, normalized so the crossingless circle is 1.
///
/// Crossings are absorbed one at a time into a partial state sum keyed by
/// how the open arc ends are paired up; closed loops contribute a factor of
/// delta as soon as they close. The A-smoothing joins a-b and c-d.
inline LaurentPoly kauffman_bracket(const PDCode& p) {
  if (!p.is_knot()) throw MalformedPD("kauffman_bracket needs a knot PD");
  validate(p);
  const int n = p.crossing_count();
  if (n == 0) return LaurentPoly(1);

  // absorb crossings so each new one touches as many open ends as possible
  std::vector<int> order;
  std::vector<bool> done(n, false);
  std::vector<int> touched(static_cast<std::size_t>(p.arc_count) + 1, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -1;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      int score = 0;
      for (int l : p.crossings[k]) score += touched[l] == 1 ? 1 : 0;
      if (score > best_score) best = k, best_score = score;
    }
    done[best] = true;
    order.push_back(best);
    for (int l : p.crossings[best]) ++touched[l];
  }

  // open ends are the labels seen exactly once so far; a state is the mate
  // of each open label, stored as a dense vector indexed by label
  using Mates = std::vector<int>;
  std::map<Mates, LaurentPoly> states;
  states.emplace(Mates(static_cast<std::size_t>(p.arc_count) + 1, 0), LaurentPoly(1));
  const LaurentPoly delta = loop_value();
  std::vector<int> seen(static_cast<std::size_t>(p.arc_count) + 1, 0);

  for (int k : order) {
    const auto& t = p.crossings[k];
    std::map<Mates, LaurentPoly> next;
    const std::pair<int, int> smoothing[2][2] = {{{t[0], t[1]}, {t[2], t[3]}}, {{t[0], t[3]}, {t[1], t[2]}}};
    for (const auto& [mates, poly] : states) {
      for (int s = 0; s < 2; ++s) {
        Mates m = mates;
        int loops = 0;
        for (const auto& [u, v] : smoothing[s]) {
          if (u == v) {
            ++loops;
            continue;
          }
          if (m[u] != 0 && m[u] == v) {
            m[u] = m[v] = 0;
            ++loops;
            continue;
          }
          const int fu = m[u] != 0 ? m[u] : u;
          const int fv = m[v] != 0 ? m[v] : v;
          if (m[u] != 0) m[u] = 0;
          if (m[v] != 0) m[v] = 0;
          m[fu] = fv;
          m[fv] = fu;
        }
        LaurentPoly term = poly.scaled(s == 0 ? 1 : -1);
        for (int i = 0; i < loops; ++i) term *= delta;
        auto [it, inserted] = next.try_emplace(std::move(m), term);
        if (!inserted) it->second += term;
      }
    }
    states.clear();
    for (auto& [m, poly] : next)
      if (!poly.is_zero()) states.emplace(m, std::move(poly));
    for (int l : t) ++seen[l];
  }

  LaurentPoly total;
  for (const auto& [m, poly] : states) total += poly;
  return total.divided_exactly_by(delta);
}

/// X(A) = (-A^3)^(-w) <p>; equals the Jones polynomial under t = A^-4.
inline LaurentPoly jones_polynomial(const PDCode& p) {
  const int w = writhe(p);
  const LaurentPoly b = kauffman_bracket(p);
  return b.scaled(-3 * w, (w % 2 == 0) ? 1 : -1);
}

/// Jones polynomial in t = A^-4.
inline LaurentPoly jones_in_t(const PDCode& p) {
  LaurentPoly out;
  const LaurentPoly x = jones_polynomial(p);
  for (const auto& [e, c] : x.terms()) {
    if (e % 4 != 0) throw std::logic_error("Jones polynomial has an exponent that is not a multiple of 4");
    out.add_term(-e / 4, c);
  }
  return out;
}

/// The lexicographically smaller of X(A) and X(A^-1).
inline LaurentPoly mirror_canonical(const LaurentPoly& x) {
  LaurentPoly m = x.substitute_power(-1);
  return m < x ? m : x;
}

inline LaurentPoly jones_fingerprint(const PDCode& p) { return mirror_canonical(jones_polynomial(p)); }

namespace inv_detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Determinant of a square matrix over Z[t] by fraction-free elimination.
inline LaurentPoly bareiss_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divided_exactly_by(prev);
    prev = m[k][k];
  }
  return m[n - 1][n - 1].scaled(0, sign);
}

}  // namespace inv_detail

/// Shifts by t^k so the exponent range is symmetric (or starts at 0 for odd
/// span) and makes the leading coefficient positive.
inline LaurentPoly normalize_alexander(const LaurentPoly& d) {
  if (d.is_zero()) return d;
  const int lo = d.min_exponent(), hi = d.max_exponent();
  const int span = hi - lo;
  const int shift = (span % 2 == 0) ? -(lo + span / 2) : -lo;
  return d.scaled(shift, d.leading() < 0 ? -1 : 1);
}

/// Alexander polynomial from the Wirtinger presentation: one row per
/// crossing, one column per over-arc, a row and a column deleted.
inline LaurentPoly alexander(const PDCode& input) {
  if (!input.is_knot()) throw MalformedPD("alexander needs a knot PD");
  validate(input);
  if (input.crossings.empty()) return LaurentPoly(1);
  const PDCode p = relabel_knot(input);
  const auto signs = crossing_signs(p);
  const int n = p.crossing_count();

  std::vector<int> parent(static_cast<std::size_t>(p.arc_count) + 1);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  for (const auto& c : p.crossings) parent[inv_detail::find_root(parent, c[1])] = inv_detail::find_root(parent, c[3]);
  std::map<int, int> column;
  for (int l = 1; l <= p.arc_count; ++l) column.try_emplace(inv_detail::find_root(parent, l), static_cast<int>(column.size()));
  if (static_cast<int>(column.size()) != n) throw MalformedPD("over-arc count does not match crossing count");

  const LaurentPoly t = LaurentPoly::monomial(1);
  const LaurentPoly one(1);
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int k = 0; k < n; ++k) {
    const auto& c = p.crossings[k];
    const int over = column[inv_detail::find_root(parent, c[1])];
    const int in = column[inv_detail::find_root(parent, c[0])];
    const int out = column[inv_detail::find_root(parent, c[2])];
    if (signs[k] > 0) {
      m[k][over] += one - t;
      m[k][in] += t;
      m[k][out] -= one;
    } else {
      m[k][over] += one - t;
      m[k][in] -= one;
      m[k][out] += t;
    }
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return normalize_alexander(inv_detail::bareiss_determinant(std::move(m)));
}

inline std::int64_t determinant_of(const LaurentPoly& alex) {
  const std::int64_t v = alex.evaluate(-1);
  return v < 0 ? -v : v;
}

inline std::int64_t determinant(const PDCode& p) { return determinant_of(alexander(p)); }

/// Number of Fox colorings mod prime q: q^(nullity) of the crossing
/// relations, with every arc at a graph vertex forced to one color.
inline std::uint64_t fox_colorings(const PDCode& p, int q) {
  if (q < 2) throw std::invalid_argument("fox_colorings: modulus must be a prime >= 2");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("fox_colorings: modulus must be prime");
  for (const auto& v : p.vertices)
    if (v.size() != 4)
      throw std::invalid_argument("colorings with the vertex condition are defined for even-degree vertices only");
  validate(p);
  const int nvar = p.arc_count;
  if (nvar == 0) return static_cast<std::uint64_t>(q);

  std::vector<std::vector<int>> rows;
  auto mod = [q](long long x) { return static_cast<int>(((x % q) + q) % q); };
  for (const auto& c : p.crossings) {
    std::vector<int> r1(nvar, 0), r2(nvar, 0);
    r1[c[1] - 1] = mod(r1[c[1] - 1] + 1);
    r1[c[3] - 1] = mod(r1[c[3] - 1] - 1);
    r2[c[1] - 1] = mod(r2[c[1] - 1] + 2);
    r2[c[0] - 1] = mod(r2[c[0] - 1] - 1);
    r2[c[2] - 1] = mod(r2[c[2] - 1] - 1);
    rows.push_back(std::move(r1));
    rows.push_back(std::move(r2));
  }
  for (const auto& v : p.vertices)
    for (std::size_t k = 1; k < v.size(); ++k) {
      std::vector<int> r(nvar, 0);
      r[v[0] - 1] = mod(r[v[0] - 1] + 1);
      r[v[k] - 1] = mod(r[v[k] - 1] - 1);
      rows.push_back(std::move(r));
    }

  auto inverse = [&](int a) {
    int result = 1;
    for (int e = q - 2, b = a; e > 0; e >>= 1, b = mod(1LL * b * b))
      if (e & 1) result = mod(1LL * result * b);
    return result;
  };
  int rank = 0;
  for (int col = 0; col < nvar && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const int inv = inverse(rows[rank][col]);
    for (int& x : rows[rank]) x = mod(1LL * x * inv);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const int f = rows[r][col];
      for (int j = 0; j < nvar; ++j) rows[r][j] = mod(rows[r][j] - 1LL * f * rows[rank][j]);
    }
    ++rank;
  }
  std::uint64_t count = 1;
  for (int i = 0; i < nvar - rank; ++i) count *= static_cast<std::uint64_t>(q);
  return count;
}

/// Tricolorable: some 3-coloring uses more than one color.
inline bool tricolorable(const PDCode& p) { return fox_colorings(p, 3) > 3; }

struct Fingerprint {
  LaurentPoly jones;
  LaurentPoly alexander;
  std::int64_t determinant = 1;

  std::string key() const { return jones.serialize() + "|" + alexander.serialize() + "|" + std::to_string(determinant); }
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const PDCode& p) {
  Fingerprint f;
  f.jones = jones_fingerprint(p);
  f.alexander = alexander(p);
  f.determinant = determinant_of(f.alexander);
  return f;
}

}  // namespace stickforge

#endif  // STICKFORGE_INVARIANTS_HPP
