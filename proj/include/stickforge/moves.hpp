#ifndef STICKFORGE_MOVES_HPP
#define STICKFORGE_MOVES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pd_code.hpp"

namespace stickforge {

namespace moves_detail {

struct Move {
  enum Kind { R1, R2, R6 } kind;
  int min_label;
  std::vector<Slot> face;
};

inline int face_min_label(const PDCode& p, const std::vector<Slot>& face) {
  int m = p.arc_count + 1;
  for (const auto& s : face) m = std::min(m, pd_detail::label_at(p, s));
  return m;
}

/// First applicable move in arc-label order, restricted to the allowed kinds.
inline std::optional<Move> find_move(const PDCode& p, bool allow_r12, bool allow_r6) {
  std::optional<Move> best;
  auto consider = [&](Move m) {
    if (!best || m.min_label < best->min_label) best = std::move(m);
  };
  for (auto& face : faces(p)) {
    const int nverts = static_cast<int>(std::count_if(face.begin(), face.end(), [&](const Slot& s) { return pd_detail::is_vertex(p, s.node); }));
    if (face.size() == 1 && nverts == 0 && allow_r12) {
      consider(Move{Move::R1, face_min_label(p, face), face});
    } else if (face.size() == 2 && nverts == 0 && allow_r12) {
      const Slot a = face[0], b = face[1];
      if (a.node == b.node) continue;
      // a leaves X along arc s and b leaves Y along arc t; s must be over
      // (or under) at both of its ends
      const auto slots = arc_slots(p);
      const int s = pd_detail::label_at(p, a);
      const Slot s_far = other_end(slots, s, a);
      if ((a.pos % 2) == (s_far.pos % 2)) consider(Move{Move::R2, face_min_label(p, face), face});
    } else if (face.size() == 2 && nverts == 1 && allow_r6) {
      consider(Move{Move::R6, face_min_label(p, face), face});
    }
  }
  return best;
}

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Rebuilds a PD without the listed crossings, renaming labels through the
/// union-find and compacting them before relabelling along the traversal.
inline PDCode rebuild(const PDCode& p, const std::vector<int>& removed, std::vector<int>& parent) {
  PDCode q;
  std::vector<bool> drop(p.crossings.size(), false);
  for (int k : removed) drop[k] = true;
  for (std::size_t k = 0; k < p.crossings.size(); ++k) {
    if (drop[k]) continue;
    auto c = p.crossings[k];
    for (int& l : c) l = find_root(parent, l);
    q.crossings.push_back(c);
  }
  for (auto v : p.vertices) {
    for (int& l : v) l = find_root(parent, l);
    q.vertices.push_back(v);
  }
  std::map<int, int> compact;
  for (auto& c : q.crossings)
    for (int l : c) compact.try_emplace(l, 0);
  for (auto& v : q.vertices)
    for (int l : v) compact.try_emplace(l, 0);
  int next = 0;
  for (auto& [l, idx] : compact) idx = ++next;
  for (auto& c : q.crossings)
    for (int& l : c) l = compact[l];
  for (auto& v : q.vertices)
    for (int& l : v) l = compact[l];
  q.arc_count = next;
  if (q.crossings.empty() && q.vertices.empty()) return PDCode{};
  validate(q);
  return relabel(q);
}

inline PDCode apply(const PDCode& p, const Move& m) {
  std::vector<int> parent(static_cast<std::size_t>(p.arc_count) + 1);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto merge = [&](int x, int y) { parent[find_root(parent, x)] = find_root(parent, y); };
  const auto slots = arc_slots(p);

  if (m.kind == Move::R1) {
    const Slot s = m.face[0];
    const auto& c = p.crossings[s.node];
    const int loop = c[s.pos];
    std::vector<int> rest;
    for (int k = 0; k < 4; ++k)
      if (c[k] != loop) rest.push_back(c[k]);
    if (rest.size() == 2) merge(rest[0], rest[1]);
    return rebuild(p, {s.node}, parent);
  }
  if (m.kind == Move::R2) {
    const Slot a = m.face[0], b = m.face[1];
    const int sl = pd_detail::label_at(p, a), tl = pd_detail::label_at(p, b);
    const Slot a_far = other_end(slots, sl, a), b_far = other_end(slots, tl, b);
    // continue each bigon arc through both of its crossings and join the ends
    merge(p.crossings[a.node][(a.pos + 2) % 4], p.crossings[a_far.node][(a_far.pos + 2) % 4]);
    merge(p.crossings[b.node][(b.pos + 2) % 4], p.crossings[b_far.node][(b_far.pos + 2) % 4]);
    return rebuild(p, {a.node, b.node}, parent);
  }
  // R6: the two vertex arcs cross right away; untwist them
  const Slot a = m.face[0], b = m.face[1];
  const Slot vs = pd_detail::is_vertex(p, a.node) ? a : b;
  const Slot xs = pd_detail::is_vertex(p, a.node) ? b : a;
  const int p_label = pd_detail::label_at(p, vs);
  const Slot p_at_x = other_end(slots, p_label, vs);
  const int x = xs.node;
  const int q_label = pd_detail::label_at(p, xs);
  const Slot q_at_v = other_end(slots, q_label, xs);
  const int p_cont = p.crossings[x][(p_at_x.pos + 2) % 4];
  const int q_cont = p.crossings[x][(xs.pos + 2) % 4];
  PDCode q = p;
  pd_detail::label_at(q, vs) = q_cont;
  pd_detail::label_at(q, q_at_v) = p_cont;
  return rebuild(q, {x}, parent);
}

inline PDCode reduce_with(PDCode p, bool r12, bool r6) {
  validate(p);
  while (auto m = find_move(p, r12, r6)) p = apply(p, *m);
  return p;
}

}  // namespace moves_detail

/// Greedy R1/R2 reduction of a knot PD until no monogon or bigon remains.
inline PDCode reduce_knot(const PDCode& p) {
  if (!p.is_knot()) throw MalformedPD("reduce_knot needs a knot PD");
  return moves_detail::reduce_with(p, true, false);
}

/// Deletes crossings formed by two vertex arcs that meet before any other
/// crossing. Topological analysis only; not a rigid-vertex move.
inline PDCode reduce_graph_r6(const PDCode& p) {
  if (p.is_knot()) throw MalformedPD("reduce_graph_r6 needs a graph PD");
  return moves_detail::reduce_with(p, false, true);
}

/// R6 together with R1/R2, to a fixpoint.
inline PDCode reduce_graph(const PDCode& p) {
  if (p.is_knot()) return reduce_knot(p);
  return moves_detail::reduce_with(p, true, true);
}

namespace moves_detail {

/// Knot PD of a closed walk made of the given passages; crossings visited
/// only once are dropped (their other strand is not part of the cycle).
inline PDCode knot_from_walk(const std::vector<Passage>& walk) {
  std::map<int, int> visits;
  for (const auto& ps : walk) ++visits[ps.crossing];
  std::vector<Passage> kept;
  for (const auto& ps : walk)
    if (visits[ps.crossing] == 2) kept.push_back(ps);
  if (kept.empty()) return PDCode{};
  std::map<int, int> index;
  for (const auto& ps : kept) index.try_emplace(ps.crossing, static_cast<int>(index.size()));
  PDCode k;
  k.crossings.assign(index.size(), {0, 0, 0, 0});
  const int m = static_cast<int>(kept.size());
  for (int i = 0; i < m; ++i) {
    auto& t = k.crossings[index[kept[i].crossing]];
    t[kept[i].entry] = i + 1;
    t[(kept[i].entry + 2) % 4] = (i + 1) % m + 1;
  }
  k.arc_count = m;
  validate(k);
  return relabel_knot(k);
}

inline std::vector<Passage> reversed(const std::vector<Passage>& w) {
  std::vector<Passage> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(Passage{it->crossing, (it->entry + 2) % 4});
  return r;
}

}  // namespace moves_detail

/// Constituent knots: the two loops of a bouquet, or the three cycles of a
/// theta-curve (edges 1+2, 1+3, 2+3), each smoothed through the vertices.
inline std::vector<PDCode> constituent_knots(const PDCode& p) {
  validate(p);
  const int nc = p.crossing_count();
  const auto strands = trace_graph(p);
  std::vector<PDCode> out;
  if (p.vertices.size() == 1 && p.vertices[0].size() == 4) {
    if (strands.size() != 2) throw MalformedPD("bouquet PD must have two loops");
    for (const auto& st : strands) {
      if (st.finish.node != nc) throw MalformedPD("bouquet loop does not return to the vertex");
      out.push_back(moves_detail::knot_from_walk(st.passages));
    }
    return out;
  }
  if (p.vertices.size() == 2 && p.vertices[0].size() == 3 && p.vertices[1].size() == 3) {
    if (strands.size() != 3) throw MalformedPD("theta PD must have three edges");
    for (const auto& st : strands)
      if (st.start.node != nc || st.finish.node != nc + 1) throw MalformedPD("theta edge does not join the two vertices");
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
      std::vector<Passage> walk = strands[pr[0]].passages;
      const auto back = moves_detail::reversed(strands[pr[1]].passages);
      walk.insert(walk.end(), back.begin(), back.end());
      out.push_back(moves_detail::knot_from_walk(walk));
    }
    return out;
  }
  throw MalformedPD("constituent_knots needs a bouquet (one 4-valent vertex) or theta (two 3-valent vertices) PD");
}

}  // namespace stickforge

#endif  // STICKFORGE_MOVES_HPP
