#ifndef STICKFORGE_EXACT_GEOM_HPP
#define STICKFORGE_EXACT_GEOM_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace stickforge {

using Rational = boost::multiprecision::cpp_rational;

template <typename T>
struct BasicPoint {
  T x{};
  T y{};

  friend bool operator==(const BasicPoint& a, const BasicPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const BasicPoint& a, const BasicPoint& b) { return !(a == b); }
  friend bool operator<(const BasicPoint& a, const BasicPoint& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
  friend BasicPoint operator-(const BasicPoint& a, const BasicPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend BasicPoint operator+(const BasicPoint& a, const BasicPoint& b) { return {a.x + b.x, a.y + b.y}; }
};

using ExactPoint = BasicPoint<Rational>;
using GridPoint = BasicPoint<std::int64_t>;

inline ExactPoint to_exact(const GridPoint& p) { return ExactPoint{Rational(p.x), Rational(p.y)}; }

template <typename T>
std::ostream& operator<<(std::ostream& os, const BasicPoint<T>& p) {
  return os << "(" << p.x << "," << p.y << ")";
}

template <typename T>
struct BasicStick {
  BasicPoint<T> a;
  BasicPoint<T> b;
};

using Stick = BasicStick<Rational>;

template <typename T>
T cross(const BasicPoint<T>& u, const BasicPoint<T>& v) {
  return u.x * v.y - u.y * v.x;
}

template <typename T>
int sign_of(const T& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Sign of (q - p) x (r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
template <typename T>
int orientation(const BasicPoint<T>& p, const BasicPoint<T>& q, const BasicPoint<T>& r) {
  return sign_of(cross(q - p, r - p));
}

/// Assuming p, q, r collinear: does r lie on the closed segment pq?
template <typename T>
bool on_segment(const BasicPoint<T>& p, const BasicPoint<T>& q, const BasicPoint<T>& r) {
  return (r.x - p.x) * (r.x - q.x) <= 0 && (r.y - p.y) * (r.y - q.y) <= 0;
}

enum class IntersectionKind { None, Proper, Degenerate };

struct Intersection {
  IntersectionKind kind = IntersectionKind::None;
  ExactPoint point{};  // set for Proper
};

/// Classifies the intersection of two sticks without computing the point.
/// Anything other than a single transverse interior crossing is Degenerate.
template <typename T>
IntersectionKind intersection_kind(const BasicStick<T>& s, const BasicStick<T>& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return IntersectionKind::Proper;
  if (o1 == 0 && on_segment(s.a, s.b, t.a)) return IntersectionKind::Degenerate;
  if (o2 == 0 && on_segment(s.a, s.b, t.b)) return IntersectionKind::Degenerate;
  if (o3 == 0 && on_segment(t.a, t.b, s.a)) return IntersectionKind::Degenerate;
  if (o4 == 0 && on_segment(t.a, t.b, s.b)) return IntersectionKind::Degenerate;
  return IntersectionKind::None;
}

/// Parameter along s of its crossing with t, as numerator/denominator with a
/// positive denominator. Only meaningful for proper crossings.
template <typename T>
std::pair<T, T> crossing_parameter(const BasicStick<T>& s, const BasicStick<T>& t) {
  const BasicPoint<T> d = s.b - s.a;
  const BasicPoint<T> e = t.b - t.a;
  T num = cross(t.a - s.a, e);
  T den = cross(d, e);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

template <typename T>
Intersection segment_intersection(const BasicStick<T>& s, const BasicStick<T>& t) {
  Intersection r;
  r.kind = intersection_kind(s, t);
  if (r.kind == IntersectionKind::Proper) {
    const auto [num, den] = crossing_parameter(s, t);
    const Rational u = Rational(num) / Rational(den);
    r.point = ExactPoint{Rational(s.a.x) + u * Rational(s.b.x - s.a.x), Rational(s.a.y) + u * Rational(s.b.y - s.a.y)};
  }
  return r;
}

enum class Side { Inside, Outside, Boundary };

template <typename T>
Side triangle_side(const std::array<BasicPoint<T>, 3>& tri, const BasicPoint<T>& p) {
  const int o = orientation(tri[0], tri[1], tri[2]);
  if (o == 0) throw std::invalid_argument("triangle_side: degenerate triangle");
  const int s0 = orientation(tri[0], tri[1], p) * o;
  const int s1 = orientation(tri[1], tri[2], p) * o;
  const int s2 = orientation(tri[2], tri[0], p) * o;
  if (s0 < 0 || s1 < 0 || s2 < 0) return Side::Outside;
  if (s0 == 0 || s1 == 0 || s2 == 0) return Side::Boundary;
  return Side::Inside;
}

/// Number of triangle sides crossed by e. Endpoints on the boundary or a
/// stick through a triangle corner are rejected.
template <typename T>
int triangle_crossing_parity(const std::array<BasicPoint<T>, 3>& tri, const BasicStick<T>& e) {
  if (triangle_side(tri, e.a) == Side::Boundary || triangle_side(tri, e.b) == Side::Boundary)
    throw std::invalid_argument("triangle_crossing_parity: endpoint on triangle boundary");
  int count = 0;
  for (int k = 0; k < 3; ++k) {
    const BasicStick<T> side{tri[k], tri[(k + 1) % 3]};
    switch (intersection_kind(e, side)) {
      case IntersectionKind::Proper: ++count; break;
      case IntersectionKind::Degenerate:
        throw std::invalid_argument("triangle_crossing_parity: stick passes through a triangle corner or along a side");
      case IntersectionKind::None: break;
    }
  }
  return count;
}

}  // namespace stickforge

#endif  // STICKFORGE_EXACT_GEOM_HPP
