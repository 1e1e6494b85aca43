#ifndef STICKFORGE_PD_CODE_HPP
#define STICKFORGE_PD_CODE_HPP

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stickforge {

class MalformedPD : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Planar diagram code.
///
/// Crossing tuples list arc labels counterclockwise starting at the incoming
/// under-strand. Graph vertices are stored separately and listed
/// counterclockwise; bouquet vertices have four slots, theta vertices three.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  std::vector<std::vector<int>> vertices;
  int arc_count = 0;

  bool is_knot() const noexcept { return vertices.empty(); }
  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }

  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Slot of an arc end: node index (crossings first, then vertices) and the
/// position within that node's tuple.
struct Slot {
  int node = -1;
  int pos = -1;
  friend bool operator==(const Slot&, const Slot&) = default;
};

namespace pd_detail {

inline int node_count(const PDCode& p) { return static_cast<int>(p.crossings.size() + p.vertices.size()); }

inline bool is_vertex(const PDCode& p, int node) { return node >= static_cast<int>(p.crossings.size()); }

inline int node_size(const PDCode& p, int node) {
  return is_vertex(p, node) ? static_cast<int>(p.vertices[node - p.crossings.size()].size()) : 4;
}

inline int& label_at(PDCode& p, Slot s) {
  return is_vertex(p, s.node) ? p.vertices[s.node - p.crossings.size()][s.pos] : p.crossings[s.node][s.pos];
}

inline int label_at(const PDCode& p, Slot s) {
  return is_vertex(p, s.node) ? p.vertices[s.node - p.crossings.size()][s.pos] : p.crossings[s.node][s.pos];
}

}  // namespace pd_detail

/// Checks arities and that every label in 1..arc_count occurs exactly twice.
inline void validate(const PDCode& p) {
  std::vector<int> seen(static_cast<std::size_t>(p.arc_count) + 1, 0);
  auto count = [&](int label) {
    if (label < 1 || label > p.arc_count)
      throw MalformedPD("arc label " + std::to_string(label) + " outside 1.." + std::to_string(p.arc_count));
    ++seen[label];
  };
  for (const auto& c : p.crossings)
    for (int l : c) count(l);
  for (const auto& v : p.vertices) {
    if (v.size() != 3 && v.size() != 4)
      throw MalformedPD("vertex tuple of arity " + std::to_string(v.size()));
    for (int l : v) count(l);
  }
  for (int l = 1; l <= p.arc_count; ++l)
    if (seen[l] != 2)
      throw MalformedPD("arc label " + std::to_string(l) + " appears " + std::to_string(seen[l]) + " times");
}

/// For each label (index = label), the two slots holding it.
inline std::vector<std::array<Slot, 2>> arc_slots(const PDCode& p) {
  std::vector<std::array<Slot, 2>> out(static_cast<std::size_t>(p.arc_count) + 1);
  std::vector<int> filled(out.size(), 0);
  for (int n = 0; n < pd_detail::node_count(p); ++n)
    for (int k = 0; k < pd_detail::node_size(p, n); ++k) {
      const int l = pd_detail::label_at(p, Slot{n, k});
      if (l < 1 || l > p.arc_count || filled[l] >= 2) throw MalformedPD("inconsistent arc labels");
      out[l][filled[l]++] = Slot{n, k};
    }
  return out;
}

inline Slot other_end(const std::vector<std::array<Slot, 2>>& slots, int label, Slot here) {
  return slots[label][0] == here ? slots[label][1] : slots[label][0];
}

/// Parses "[(1,5,2,4),(3,1,4,6),V(1,2,3,4)]" and the variants with square
/// brackets, no outer brackets, or KnotInfo-style nested lists. Bare
/// 3-tuples are read as theta vertices.
inline PDCode parse_pd(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.rfind("PD", 0) == 0) s.erase(0, 2);

  auto is_open = [](char c) { return c == '(' || c == '['; };
  auto is_close = [](char c) { return c == ')' || c == ']'; };

  std::size_t i = 0;
  bool wrapped = false;
  if (!s.empty() && is_open(s[0])) {
    if (s.size() == 2 && is_close(s[1])) return PDCode{};
    if (s.size() > 1 && (is_open(s[1]) || s[1] == 'V' || s[1] == 'X')) {
      wrapped = true;
      i = 1;
    }
  }

  PDCode p;
  bool expect_item = true;
  while (i < s.size()) {
    if (wrapped && is_close(s[i])) {
      if (i + 1 != s.size()) throw MalformedPD("trailing characters after closing bracket");
      wrapped = false;
      ++i;
      break;
    }
    if (!expect_item) {
      if (s[i] != ',') throw MalformedPD(std::string("expected ',' at '") + s[i] + "'");
      ++i;
      expect_item = true;
      continue;
    }
    bool vertex = false;
    if (s[i] == 'V') {
      vertex = true;
      ++i;
    } else if (s[i] == 'X') {
      ++i;
    }
    if (i >= s.size() || !is_open(s[i])) throw MalformedPD("expected '(' or '['");
    ++i;
    std::vector<int> tuple;
    while (true) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) throw MalformedPD("non-integer token in tuple");
      tuple.push_back(std::stoi(s.substr(i, j - i)));
      i = j;
      if (i >= s.size()) throw MalformedPD("unterminated tuple");
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (is_close(s[i])) {
        ++i;
        break;
      }
      throw MalformedPD(std::string("unexpected character '") + s[i] + "' in tuple");
    }
    if (!vertex && tuple.size() == 4) {
      p.crossings.push_back({tuple[0], tuple[1], tuple[2], tuple[3]});
    } else if (tuple.size() == 3 || (vertex && tuple.size() == 4)) {
      p.vertices.push_back(tuple);
    } else {
      throw MalformedPD("tuple of arity " + std::to_string(tuple.size()));
    }
    expect_item = false;
  }
  if (wrapped) throw MalformedPD("unbalanced brackets");
  if (expect_item && !(p.crossings.empty() && p.vertices.empty())) throw MalformedPD("dangling ','");

  int max_label = 0;
  for (const auto& c : p.crossings)
    for (int l : c) max_label = std::max(max_label, l);
  for (const auto& v : p.vertices)
    for (int l : v) max_label = std::max(max_label, l);
  p.arc_count = max_label;
  validate(p);
  return p;
}

inline std::string emit_pd(const PDCode& p) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  auto tuple = [&](const auto& t, bool vertex) {
    if (!first) os << ",";
    first = false;
    if (vertex) os << "V";
    os << "(";
    for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
    os << ")";
  };
  for (const auto& c : p.crossings) tuple(c, false);
  for (const auto& v : p.vertices) tuple(v, true);
  os << "]";
  return os.str();
}

/// One pass of a traversal through a crossing.
struct Passage {
  int crossing;
  int entry;  // tuple position the strand enters through
  bool over() const noexcept { return entry % 2 == 1; }
};

/// A strand of the diagram traced from slot to slot: a closed walk for knots,
/// a vertex-to-vertex path for graphs.
struct Strand {
  std::vector<Passage> passages;
  std::vector<int> arcs;  // arcs[i] enters passages[i]; arcs.back() leaves the last passage
  Slot start;             // vertex slot (graphs) or unused (knots)
  Slot finish;
};

/// Traces a knot PD. The direction is chosen so under-passages enter at
/// tuple position 0; for a consistent PD this is the labelled orientation.
inline Strand trace_knot(const PDCode& p) {
  if (!p.is_knot()) throw MalformedPD("trace_knot on a graph PD");
  Strand st;
  if (p.crossings.empty()) return st;
  const auto slots = arc_slots(p);
  auto walk = [&](Slot entry) {
    Strand w;
    Slot cur = entry;
    const std::size_t limit = 2 * p.crossings.size();
    while (w.passages.size() < limit) {
      w.arcs.push_back(p.crossings[cur.node][cur.pos]);
      w.passages.push_back(Passage{cur.node, cur.pos});
      const int out_pos = (cur.pos + 2) % 4;
      const int out_label = p.crossings[cur.node][out_pos];
      cur = other_end(slots, out_label, Slot{cur.node, out_pos});
    }
    w.arcs.push_back(w.arcs.front());
    return w;
  };
  // label 1 may be absent in intermediate PDs; start from crossing 0's first label
  const int l0 = p.crossings[0][0];
  Strand a = walk(slots[l0][0]);
  Strand b = walk(slots[l0][1]);
  auto consistent = [](const Strand& w) {
    for (const auto& ps : w.passages)
      if (!ps.over()) return ps.entry == 0;
    return true;
  };
  if (!consistent(a) && consistent(b)) return b;
  return a;
}

/// Traces every strand of a graph PD, starting from vertex slots in order.
inline std::vector<Strand> trace_graph(const PDCode& p) {
  const auto slots = arc_slots(p);
  std::vector<Strand> out;
  const int nc = static_cast<int>(p.crossings.size());
  std::vector<std::vector<bool>> used(p.vertices.size());
  for (std::size_t v = 0; v < p.vertices.size(); ++v) used[v].assign(p.vertices[v].size(), false);
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    for (std::size_t k = 0; k < p.vertices[v].size(); ++k) {
      if (used[v][k]) continue;
      Strand st;
      st.start = Slot{nc + static_cast<int>(v), static_cast<int>(k)};
      used[v][k] = true;
      int label = p.vertices[v][k];
      Slot cur = other_end(slots, label, st.start);
      std::size_t guard = 0;
      while (!pd_detail::is_vertex(p, cur.node)) {
        st.arcs.push_back(label);
        st.passages.push_back(Passage{cur.node, cur.pos});
        const int out_pos = (cur.pos + 2) % 4;
        label = p.crossings[cur.node][out_pos];
        cur = other_end(slots, label, Slot{cur.node, out_pos});
        if (++guard > 4 * p.crossings.size() + 4) throw MalformedPD("strand does not terminate at a vertex");
      }
      st.arcs.push_back(label);
      st.finish = cur;
      used[cur.node - nc][cur.pos] = true;
      out.push_back(std::move(st));
    }
  }
  return out;
}

/// Crossing signs (+1 / -1) for a knot PD, indexed like `crossings`.
inline std::vector<int> crossing_signs(const PDCode& p) {
  std::vector<int> sign(p.crossings.size(), 0);
  const Strand st = trace_knot(p);
  // positive when the over-strand runs d -> b while the under-strand runs a -> c
  for (const auto& ps : st.passages)
    if (ps.over()) sign[ps.crossing] = ps.entry == 3 ? +1 : -1;
  // under-strand entering at c: the tuple is written against the traversal
  for (const auto& ps : st.passages)
    if (!ps.over() && ps.entry == 2) sign[ps.crossing] = -sign[ps.crossing];
  return sign;
}

inline int writhe(const PDCode& p) {
  const auto s = crossing_signs(p);
  return std::accumulate(s.begin(), s.end(), 0);
}

/// Relabels a knot PD so arcs run 1..2n along the traversal and every tuple
/// starts at its incoming under-arc.
inline PDCode relabel_knot(const PDCode& p) {
  PDCode out;
  if (p.crossings.empty()) return out;
  const Strand st = trace_knot(p);
  const int n2 = static_cast<int>(st.passages.size());
  std::vector<std::array<int, 4>> tuples(p.crossings.size());
  for (int i = 0; i < n2; ++i) {
    const auto& ps = st.passages[i];
    tuples[ps.crossing][ps.entry] = i + 1;
    tuples[ps.crossing][(ps.entry + 2) % 4] = (i + 1) % n2 + 1;
  }
  for (const auto& ps : st.passages)
    if (!ps.over() && ps.entry == 2) std::rotate(tuples[ps.crossing].begin(), tuples[ps.crossing].begin() + 2, tuples[ps.crossing].end());
  out.crossings = std::move(tuples);
  out.arc_count = n2;
  return out;
}

/// Relabels a graph PD strand by strand and orients crossing tuples along
/// the traversal. Vertex tuples keep their cyclic order, rotated to start at
/// the smallest label.
inline PDCode relabel_graph(const PDCode& p) {
  const auto strands = trace_graph(p);
  PDCode out;
  out.crossings.resize(p.crossings.size());
  out.vertices = p.vertices;
  int next = 1;
  const int nc = static_cast<int>(p.crossings.size());
  for (const auto& st : strands) {
    const int first = next;
    for (std::size_t i = 0; i < st.passages.size(); ++i) {
      const auto& ps = st.passages[i];
      out.crossings[ps.crossing][ps.entry] = next;
      out.crossings[ps.crossing][(ps.entry + 2) % 4] = next + 1;
      ++next;
    }
    out.vertices[st.start.node - nc][st.start.pos] = first;
    out.vertices[st.finish.node - nc][st.finish.pos] = next;
    ++next;
  }
  for (const auto& st : strands)
    for (const auto& ps : st.passages)
      if (!ps.over() && ps.entry == 2)
        std::rotate(out.crossings[ps.crossing].begin(), out.crossings[ps.crossing].begin() + 2, out.crossings[ps.crossing].end());
  for (auto& v : out.vertices) std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  out.arc_count = next - 1;
  return out;
}

inline PDCode relabel(const PDCode& p) { return p.is_knot() ? relabel_knot(p) : relabel_graph(p); }

/// Faces of the planar map as cycles of slots; each slot is the start of an
/// arc traversed away from its node.
inline std::vector<std::vector<Slot>> faces(const PDCode& p) {
  const auto slots = arc_slots(p);
  std::vector<std::vector<Slot>> out;
  std::vector<std::vector<bool>> seen(pd_detail::node_count(p));
  for (int n = 0; n < pd_detail::node_count(p); ++n) seen[n].assign(pd_detail::node_size(p, n), false);
  for (int n = 0; n < pd_detail::node_count(p); ++n) {
    for (int k = 0; k < pd_detail::node_size(p, n); ++k) {
      if (seen[n][k]) continue;
      std::vector<Slot> face;
      Slot cur{n, k};
      while (!seen[cur.node][cur.pos]) {
        seen[cur.node][cur.pos] = true;
        face.push_back(cur);
        const Slot arrive = other_end(slots, pd_detail::label_at(p, cur), cur);
        const int sz = pd_detail::node_size(p, arrive.node);
        cur = Slot{arrive.node, (arrive.pos + sz - 1) % sz};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

/// Flips crossing `k`: the over-strand becomes the under-strand. The tuple is
/// rotated so it again starts at the incoming under-arc.
inline void switch_crossing(PDCode& p, int k, int sign) {
  auto& t = p.crossings[k];
  // positive: over runs d -> b, so the new incoming under-arc is d
  if (sign > 0)
    std::rotate(t.begin(), t.begin() + 3, t.end());
  else
    std::rotate(t.begin(), t.begin() + 1, t.end());
}

/// Mirror image: every crossing switched.
inline PDCode mirror(const PDCode& p) {
  PDCode out = p;
  const auto signs = crossing_signs(p);
  for (int k = 0; k < p.crossing_count(); ++k) switch_crossing(out, k, signs[k]);
  return out;
}

}  // namespace stickforge

#endif  // STICKFORGE_PD_CODE_HPP
