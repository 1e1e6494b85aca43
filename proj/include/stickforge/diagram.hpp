#ifndef STICKFORGE_DIAGRAM_HPP
#define STICKFORGE_DIAGRAM_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact_geom.hpp"
#include "graph_type.hpp"

namespace stickforge {

class GeneralPositionViolation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Combinatorics of a placement: which sticks cross, in what order along
/// each stick, and how they cross.
struct Layout {
  std::vector<std::array<int, 2>> pairs;  // crossing k is between sticks pairs[k][0] < pairs[k][1]
  std::vector<std::vector<int>> order;    // crossing ids along each stick, from its start
  std::vector<int> flags;                 // sign of cross(dir of first stick, dir of second stick)

  friend bool operator==(const Layout&, const Layout&) = default;
};

/// Signed extended Gauss code of a shadow.
///
/// strands[s] lists crossing ids in traversal order. flags[c] is the sign of
/// the cross product of the directions at the first and second passage of
/// crossing c. rotation describes the vertices: for a bouquet, the
/// counterclockwise order of the half-edges at x (0 = loop 1 start, 1 = loop 1
/// end, 2 = loop 2 start, 3 = loop 2 end) beginning with 0; for a theta-curve,
/// +1/-1 for whether edges 0,1,2 leave u (then w) counterclockwise.
struct GaussCode {
  GraphType::Kind kind = GraphType::Kind::Cycle;
  std::vector<std::vector<int>> strands;
  std::vector<int> flags;
  std::vector<int> rotation;

  int crossing_count() const noexcept { return static_cast<int>(flags.size()); }
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

namespace diagram_detail {

template <typename T>
bool param_less(const std::pair<T, T>& a, const std::pair<T, T>& b) {
  return a.first * b.second < b.first * a.second;
}

/// Counterclockwise angular order of direction vectors, starting at dirs[0].
template <typename T>
std::vector<int> ccw_order(const std::vector<BasicPoint<T>>& dirs) {
  const BasicPoint<T> ref = dirs[0];
  auto half = [&](const BasicPoint<T>& d) {
    const int c = sign_of(cross(ref, d));
    if (c > 0) return 0;
    if (c < 0) return 1;
    return (ref.x * d.x + ref.y * d.y) > 0 ? -1 : 1;  // same direction first; opposite starts the second half
  };
  std::vector<int> idx(dirs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin() + 1, idx.end(), [&](int a, int b) {
    const int ha = half(dirs[a]), hb = half(dirs[b]);
    if (ha != hb) return ha < hb;
    return cross(dirs[a], dirs[b]) > 0;
  });
  return idx;
}

}  // namespace diagram_detail

/// Computes the layout, or nullopt (with a reason) when the placement is not
/// in general position.
template <typename T>
std::optional<Layout> analyze_layout(const GraphType& g, const std::vector<BasicPoint<T>>& v, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) -> std::optional<Layout> {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (static_cast<int>(v.size()) != g.vertex_count()) return fail("vertex count does not match graph type");
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return fail("coincident vertices " + std::to_string(i) + " and " + std::to_string(j));

  const auto st = g.sticks();
  const int n = static_cast<int>(st.size());
  Layout out;
  out.order.assign(n, {});
  std::vector<std::vector<std::pair<T, T>>> params(n);
  for (int i = 0; i < n; ++i) {
    const BasicStick<T> si{v[st[i][0]], v[st[i][1]]};
    for (int j = i + 1; j < n; ++j) {
      const BasicStick<T> sj{v[st[j][0]], v[st[j][1]]};
      int shared = -1, shared_count = 0;
      for (int a : st[i])
        for (int b : st[j])
          if (a == b) shared = a, ++shared_count;
      if (shared_count == 2) return fail("sticks " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      if (shared_count == 1) {
        const int pi = st[i][0] == shared ? st[i][1] : st[i][0];
        const int pj = st[j][0] == shared ? st[j][1] : st[j][0];
        const BasicPoint<T> di = v[pi] - v[shared], dj = v[pj] - v[shared];
        if (cross(di, dj) == 0 && di.x * dj.x + di.y * dj.y > 0)
          return fail("adjacent sticks " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        continue;
      }
      switch (intersection_kind(si, sj)) {
        case IntersectionKind::None: break;
        case IntersectionKind::Degenerate:
          return fail("sticks " + std::to_string(i) + " and " + std::to_string(j) + " touch degenerately");
        case IntersectionKind::Proper: {
          const int k = static_cast<int>(out.pairs.size());
          out.pairs.push_back({i, j});
          out.flags.push_back(sign_of(cross(si.b - si.a, sj.b - sj.a)));
          out.order[i].push_back(k);
          out.order[j].push_back(k);
          params[i].push_back(crossing_parameter(si, sj));
          params[j].push_back(crossing_parameter(sj, si));
          break;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> idx(out.order[i].size());
    for (std::size_t a = 0; a < idx.size(); ++a) idx[a] = static_cast<int>(a);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return diagram_detail::param_less(params[i][a], params[i][b]); });
    for (std::size_t a = 1; a < idx.size(); ++a)
      if (!diagram_detail::param_less(params[i][idx[a - 1]], params[i][idx[a]]))
        return fail("two crossings coincide on stick " + std::to_string(i));
    std::vector<int> sorted;
    for (int a : idx) sorted.push_back(out.order[i][a]);
    out.order[i] = std::move(sorted);
  }
  return out;
}

/// Vertex rotation data for a placement (see GaussCode::rotation).
template <typename T>
std::vector<int> vertex_rotation(const GraphType& g, const std::vector<BasicPoint<T>>& v) {
  const auto strands = g.strands();
  if (g.kind() == GraphType::Kind::Bouquet) {
    std::vector<BasicPoint<T>> dirs;
    for (const auto& path : strands) {
      dirs.push_back(v[path[1]] - v[path[0]]);
      dirs.push_back(v[path[path.size() - 2]] - v[path.back()]);
    }
    return diagram_detail::ccw_order(dirs);
  }
  if (g.kind() == GraphType::Kind::Theta) {
    std::vector<int> rot;
    for (int end = 0; end < 2; ++end) {
      std::vector<BasicPoint<T>> dirs;
      for (const auto& path : strands)
        dirs.push_back(end == 0 ? v[path[1]] - v[path[0]] : v[path[path.size() - 2]] - v[path.back()]);
      const auto ord = diagram_detail::ccw_order(dirs);
      rot.push_back(ord[1] == 1 ? 1 : -1);
    }
    return rot;
  }
  return {};
}

/// Gauss code in traversal order with crossing ids taken from the layout.
inline GaussCode gauss_code_of(const GraphType& g, const Layout& lay, std::vector<int> rotation) {
  GaussCode code;
  code.kind = g.kind();
  code.flags = lay.flags;
  code.rotation = std::move(rotation);
  const auto strand_of = g.stick_strand();
  code.strands.assign(g.sizes().size(), {});
  for (std::size_t s = 0; s < lay.order.size(); ++s)
    for (int c : lay.order[s]) code.strands[strand_of[s]].push_back(c);
  return code;
}

struct DiagramCrossing {
  int i = 0;
  int j = 0;
  ExactPoint point;
  std::optional<int> over;
};

/// A stick diagram in general position with its crossings computed.
class StickDiagram {
public:
  const GraphType& graph_type() const noexcept { return graph_; }
  const std::vector<ExactPoint>& vertices() const noexcept { return vertices_; }
  const std::vector<DiagramCrossing>& crossings() const noexcept { return crossings_; }
  const Layout& layout() const noexcept { return layout_; }
  const std::vector<int>& rotation() const noexcept { return rotation_; }
  int crossing_count() const noexcept { return static_cast<int>(crossings_.size()); }

  /// Raw Gauss code; crossing k of the code is crossings()[k].
  GaussCode gauss_code() const { return gauss_code_of(graph_, layout_, rotation_); }

  /// Copy with crossing k's over-stick set from bits (1 = the lower-numbered stick is over).
  StickDiagram with_over(const std::vector<int>& bits) const {
    if (bits.size() != crossings_.size()) throw std::invalid_argument("with_over: bit count does not match crossing count");
    StickDiagram d = *this;
    for (std::size_t k = 0; k < bits.size(); ++k) d.crossings_[k].over = bits[k] ? d.crossings_[k].i : d.crossings_[k].j;
    return d;
  }

  template <typename T>
  friend StickDiagram build_diagram(const GraphType& g, const std::vector<BasicPoint<T>>& vertices);

private:
  StickDiagram(GraphType g) : graph_(std::move(g)) {}

  GraphType graph_;
  std::vector<ExactPoint> vertices_;
  std::vector<DiagramCrossing> crossings_;
  Layout layout_;
  std::vector<int> rotation_;
};

/// Builds a diagram from vertex positions; throws GeneralPositionViolation.
template <typename T>
StickDiagram build_diagram(const GraphType& g, const std::vector<BasicPoint<T>>& vertices) {
  std::string why;
  auto lay = analyze_layout(g, vertices, &why);
  if (!lay) throw GeneralPositionViolation(why);
  StickDiagram d(g);
  for (const auto& p : vertices) d.vertices_.push_back(ExactPoint{Rational(p.x), Rational(p.y)});
  const auto st = g.sticks();
  for (const auto& pr : lay->pairs) {
    const BasicStick<T> a{vertices[st[pr[0]][0]], vertices[st[pr[0]][1]]};
    const BasicStick<T> b{vertices[st[pr[1]][0]], vertices[st[pr[1]][1]]};
    d.crossings_.push_back(DiagramCrossing{pr[0], pr[1], segment_intersection(a, b).point, std::nullopt});
  }
  d.layout_ = std::move(*lay);
  d.rotation_ = vertex_rotation(g, vertices);
  return d;
}

}  // namespace stickforge

#endif  // STICKFORGE_DIAGRAM_HPP
