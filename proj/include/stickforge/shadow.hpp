#ifndef STICKFORGE_SHADOW_HPP
#define STICKFORGE_SHADOW_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "pd_code.hpp"

namespace stickforge {

/// A shadow: the canonical signed Gauss code of a diagram with crossing
/// information forgotten.
struct Shadow {
  GaussCode code;    // canonical
  std::string text;  // canonical text form, e.g. "K:1+,2-,3+,1,2,3"

  int crossing_count() const noexcept { return code.crossing_count(); }
  friend bool operator==(const Shadow& a, const Shadow& b) { return a.text == b.text; }
  friend bool operator<(const Shadow& a, const Shadow& b) { return a.text < b.text; }
};

namespace shadow_detail {

struct Step {
  int crossing;
  int passage;  // 0 = first passage in the source code, 1 = second
  int mult;     // +1 if traversed in the source direction, -1 if reversed
};

/// Applies one symmetry and returns the relabelled code plus its comparison key.
inline std::pair<std::vector<int>, GaussCode> transform(const GaussCode& src, const std::vector<std::vector<Step>>& strands,
                                                        std::vector<int> rotation, bool mirror) {
  const int n = src.crossing_count();
  std::vector<int> new_id(n, -1), first_seen(n, -1);
  GaussCode out;
  out.kind = src.kind;
  out.flags.assign(n, 0);
  std::vector<int> mult_prod(n, 1);
  int next = 0;
  std::vector<std::vector<int>> seq(strands.size());
  for (std::size_t s = 0; s < strands.size(); ++s)
    for (const auto& st : strands[s]) {
      mult_prod[st.crossing] *= st.mult;
      if (new_id[st.crossing] < 0) {
        new_id[st.crossing] = next++;
        first_seen[st.crossing] = st.passage;
      }
      seq[s].push_back(new_id[st.crossing]);
    }
  for (int c = 0; c < n; ++c) {
    int f = src.flags[c] * mult_prod[c];
    if (first_seen[c] == 1) f = -f;
    if (mirror) f = -f;
    out.flags[new_id[c]] = f;
  }
  out.strands = std::move(seq);
  out.rotation = std::move(rotation);

  std::vector<int> key(out.rotation.begin(), out.rotation.end());
  key.push_back(-100);
  std::vector<bool> seen(n, false);
  for (const auto& s : out.strands) {
    for (int c : s) {
      key.push_back(seen[c] ? 3 * c : 3 * c + (out.flags[c] > 0 ? 1 : 2));
      seen[c] = true;
    }
    key.push_back(-1);
  }
  return {std::move(key), std::move(out)};
}

/// Passage steps of a strand, optionally reversed.
inline std::vector<Step> steps(const std::vector<int>& strand, const std::vector<std::array<int, 2>>& passage_index, bool reverse,
                               const std::vector<int>& offsets, int s) {
  std::vector<Step> out;
  const int m = static_cast<int>(strand.size());
  for (int k = 0; k < m; ++k) {
    const int i = reverse ? m - 1 - k : k;
    const int c = strand[i];
    const int pos = offsets[s] + i;
    out.push_back(Step{c, passage_index[c][0] == pos ? 0 : 1, reverse ? -1 : 1});
  }
  return out;
}

inline std::vector<int> normalize_cycle(std::vector<int> cyc) {
  auto it = std::find(cyc.begin(), cyc.end(), 0);
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

}  // namespace shadow_detail

inline std::string to_text(const GaussCode& code) {
  std::ostringstream os;
  switch (code.kind) {
    case GraphType::Kind::Cycle: os << "K"; break;
    case GraphType::Kind::Bouquet:
      os << "B";
      for (int r : code.rotation) os << r;
      break;
    case GraphType::Kind::Theta:
      os << "T";
      for (int r : code.rotation) os << (r > 0 ? '+' : '-');
      break;
  }
  os << ":";
  std::vector<bool> seen(code.flags.size(), false);
  for (std::size_t s = 0; s < code.strands.size(); ++s) {
    if (s) os << "/";
    for (std::size_t i = 0; i < code.strands[s].size(); ++i) {
      const int c = code.strands[s][i];
      if (i) os << ",";
      os << c + 1;
      if (!seen[c]) os << (code.flags[c] > 0 ? "+" : "-");
      seen[c] = true;
    }
  }
  return os.str();
}

/// Parses the text form back into a Gauss code (not re-canonicalized).
inline GaussCode parse_gauss_code(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) throw std::invalid_argument("bad shadow code '" + text + "'");
  GaussCode code;
  const std::string head = text.substr(0, colon);
  std::size_t expected_strands = 1;
  if (head == "K") {
    code.kind = GraphType::Kind::Cycle;
  } else if (head[0] == 'B' && head.size() == 5) {
    code.kind = GraphType::Kind::Bouquet;
    for (std::size_t i = 1; i < 5; ++i) code.rotation.push_back(head[i] - '0');
    std::vector<int> sorted = code.rotation;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>{0, 1, 2, 3} || code.rotation[0] != 0) throw std::invalid_argument("bad bouquet rotation in '" + text + "'");
    expected_strands = 2;
  } else if (head[0] == 'T' && head.size() == 3) {
    code.kind = GraphType::Kind::Theta;
    for (std::size_t i = 1; i < 3; ++i) {
      if (head[i] != '+' && head[i] != '-') throw std::invalid_argument("bad theta rotation in '" + text + "'");
      code.rotation.push_back(head[i] == '+' ? 1 : -1);
    }
    expected_strands = 3;
  } else {
    throw std::invalid_argument("bad shadow code '" + text + "'");
  }
  std::vector<int> count;
  std::string body = text.substr(colon + 1);
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : body) {
      if (ch == '/') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
  }
  if (parts.size() != expected_strands) throw std::invalid_argument("wrong strand count in '" + text + "'");
  for (const auto& part : parts) {
    std::vector<int> strand;
    std::stringstream ss(part);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty passage in '" + text + "'");
      int sign = 0;
      if (tok.back() == '+' || tok.back() == '-') {
        sign = tok.back() == '+' ? 1 : -1;
        tok.pop_back();
      }
      const int c = std::stoi(tok) - 1;
      if (c < 0) throw std::invalid_argument("bad crossing id in '" + text + "'");
      if (static_cast<int>(count.size()) <= c) {
        count.resize(c + 1, 0);
        code.flags.resize(c + 1, 0);
      }
      if (count[c] == 0 && sign == 0) throw std::invalid_argument("first passage lacks a sign in '" + text + "'");
      if (count[c] == 1 && sign != 0) throw std::invalid_argument("second passage carries a sign in '" + text + "'");
      if (sign) code.flags[c] = sign;
      ++count[c];
      strand.push_back(c);
    }
    code.strands.push_back(std::move(strand));
  }
  for (int k : count)
    if (k != 2) throw std::invalid_argument("crossing not visited exactly twice in '" + text + "'");
  return code;
}

/// Lexicographic minimum over start points, directions, graph symmetries and
/// mirror image.
inline GaussCode canonical_code(const GaussCode& src) {
  using namespace shadow_detail;
  const int n = src.crossing_count();
  std::vector<int> offsets;
  int total = 0;
  for (const auto& s : src.strands) {
    offsets.push_back(total);
    total += static_cast<int>(s.size());
  }
  std::vector<std::array<int, 2>> passage_index(n, {-1, -1});
  {
    int pos = 0;
    for (const auto& s : src.strands)
      for (int c : s) {
        auto& pi = passage_index[c];
        (pi[0] < 0 ? pi[0] : pi[1]) = pos++;
      }
  }

  std::vector<int> best_key;
  GaussCode best;
  auto offer = [&](const std::vector<std::vector<Step>>& strands, const std::vector<int>& rotation, bool mirror) {
    auto [key, code] = transform(src, strands, rotation, mirror);
    if (best_key.empty() || key < best_key) {
      best_key = std::move(key);
      best = std::move(code);
    }
  };

  switch (src.kind) {
    case GraphType::Kind::Cycle: {
      const auto& s = src.strands[0];
      const int m = static_cast<int>(s.size());
      for (int reverse = 0; reverse < 2; ++reverse) {
        const auto base = steps(s, passage_index, reverse, offsets, 0);
        for (int start = 0; start < std::max(m, 1); ++start) {
          std::vector<Step> rot;
          for (int k = 0; k < m; ++k) rot.push_back(base[(start + k) % m]);
          for (int mirror = 0; mirror < 2; ++mirror) offer({rot}, {}, mirror);
        }
      }
      break;
    }
    case GraphType::Kind::Bouquet: {
      for (int swap = 0; swap < 2; ++swap)
        for (int rev_mask = 0; rev_mask < 4; ++rev_mask)
          for (int mirror = 0; mirror < 2; ++mirror) {
            std::vector<std::vector<Step>> strands;
            int relabel[4];
            for (int slot = 0; slot < 2; ++slot) {
              const int loop = swap ? 1 - slot : slot;
              const bool rev = (rev_mask >> slot) & 1;
              strands.push_back(steps(src.strands[loop], passage_index, rev, offsets, loop));
              relabel[2 * loop] = 2 * slot + (rev ? 1 : 0);
              relabel[2 * loop + 1] = 2 * slot + (rev ? 0 : 1);
            }
            std::vector<int> cyc;
            for (int h : src.rotation) cyc.push_back(relabel[h]);
            if (mirror) std::reverse(cyc.begin(), cyc.end());
            offer(strands, normalize_cycle(cyc), mirror);
          }
      break;
    }
    case GraphType::Kind::Theta: {
      std::array<int, 3> perm{0, 1, 2};
      do {
        for (int swap = 0; swap < 2; ++swap)
          for (int mirror = 0; mirror < 2; ++mirror) {
            // perm[new] = old edge placed at position new
            std::vector<std::vector<Step>> strands;
            for (int e = 0; e < 3; ++e) strands.push_back(steps(src.strands[perm[e]], passage_index, swap, offsets, perm[e]));
            std::vector<int> rotation;
            for (int end = 0; end < 2; ++end) {
              const int old_end = swap ? 1 - end : end;
              // old ccw order at that vertex, as old edge ids
              std::array<int, 3> ccw = src.rotation[old_end] > 0 ? std::array<int, 3>{0, 1, 2} : std::array<int, 3>{0, 2, 1};
              std::array<int, 3> inv{};
              for (int e = 0; e < 3; ++e) inv[perm[e]] = e;
              const std::array<int, 3> mapped{inv[ccw[0]], inv[ccw[1]], inv[ccw[2]]};
              // cyclic order (0,1,2)?
              const int pos0 = static_cast<int>(std::find(mapped.begin(), mapped.end(), 0) - mapped.begin());
              int r = mapped[(pos0 + 1) % 3] == 1 ? 1 : -1;
              if (mirror) r = -r;
              rotation.push_back(r);
            }
            offer(strands, rotation, mirror);
          }
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
  }
  return best;
}

inline Shadow make_shadow(const GaussCode& raw) {
  Shadow s;
  s.code = canonical_code(raw);
  s.text = to_text(s.code);
  return s;
}

inline Shadow parse_shadow(const std::string& text) { return make_shadow(parse_gauss_code(text)); }

inline Shadow shadow_of(const StickDiagram& d) { return make_shadow(d.gauss_code()); }

/// PD code of a Gauss code with over/under chosen by bits: bit k = 1 means
/// the first passage of crossing k goes over. Arcs are numbered along the
/// strands in order.
inline PDCode assign_crossings(const GaussCode& code, const std::vector<int>& bits) {
  const int n = code.crossing_count();
  if (static_cast<int>(bits.size()) != n)
    throw std::invalid_argument("assign_crossings: expected " + std::to_string(n) + " bits, got " + std::to_string(bits.size()));
  PDCode pd;
  std::vector<std::array<int, 2>> in(n, {0, 0}), out(n, {0, 0});
  std::vector<int> seen(n, 0);
  std::vector<std::array<int, 2>> ends;  // first and last arc of each strand

  if (code.kind == GraphType::Kind::Cycle) {
    const auto& s = code.strands[0];
    const int m = static_cast<int>(s.size());
    if (m == 0) return pd;
    for (int i = 0; i < m; ++i) {
      const int c = s[i];
      in[c][seen[c]] = i + 1;
      out[c][seen[c]] = (i + 1) % m + 1;
      ++seen[c];
    }
    pd.arc_count = m;
  } else {
    int label = 1;
    for (const auto& s : code.strands) {
      const int first = label;
      for (int c : s) {
        in[c][seen[c]] = label;
        out[c][seen[c]] = label + 1;
        ++seen[c];
        ++label;
      }
      ends.push_back({first, label});
      ++label;
    }
    pd.arc_count = label - 1;
  }

  for (int c = 0; c < n; ++c) {
    std::array<int, 4> t = code.flags[c] > 0 ? std::array<int, 4>{in[c][0], in[c][1], out[c][0], out[c][1]}
                                             : std::array<int, 4>{in[c][0], out[c][1], out[c][0], in[c][1]};
    if (bits[c]) {
      // second passage is under: start at its incoming arc
      const int shift = code.flags[c] > 0 ? 1 : 3;
      std::rotate(t.begin(), t.begin() + shift, t.end());
    }
    pd.crossings.push_back(t);
  }

  auto rotate_min = [](std::vector<int> v) {
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    return v;
  };
  if (code.kind == GraphType::Kind::Bouquet) {
    const int half[4] = {ends[0][0], ends[0][1], ends[1][0], ends[1][1]};
    std::vector<int> v;
    for (int h : code.rotation) v.push_back(half[h]);
    pd.vertices.push_back(rotate_min(v));
  } else if (code.kind == GraphType::Kind::Theta) {
    for (int end = 0; end < 2; ++end) {
      const int e[3] = {ends[0][end], ends[1][end], ends[2][end]};
      std::vector<int> v = code.rotation[end] > 0 ? std::vector<int>{e[0], e[1], e[2]} : std::vector<int>{e[0], e[2], e[1]};
      pd.vertices.push_back(rotate_min(v));
    }
  }
  validate(pd);
  return pd;
}

inline PDCode assign_crossings(const Shadow& s, const std::vector<int>& bits) { return assign_crossings(s.code, bits); }

/// Bit k = 1 puts the lower-numbered stick over at crossing k of the diagram.
inline PDCode assign_crossings(const StickDiagram& d, const std::vector<int>& bits) { return assign_crossings(d.gauss_code(), bits); }

/// All crossing assignments as bit vectors, in binary counting order.
inline std::vector<int> bits_of(std::uint64_t mask, int n) {
  std::vector<int> bits(n);
  for (int k = 0; k < n; ++k) bits[k] = static_cast<int>((mask >> k) & 1U);
  return bits;
}

struct ShadowReduction {
  Shadow shadow;
  bool reducible = false;
};

/// Removes monogons (a crossing met twice in a row along a strand) until
/// none remain.
inline ShadowReduction reduce_shadow(const Shadow& s) {
  GaussCode code = s.code;
  bool reducible = false;
  while (true) {
    int hit = -1;
    for (std::size_t k = 0; k < code.strands.size() && hit < 0; ++k) {
      const auto& st = code.strands[k];
      const int m = static_cast<int>(st.size());
      for (int i = 0; i + 1 < m && hit < 0; ++i)
        if (st[i] == st[i + 1]) hit = st[i];
      if (hit < 0 && code.kind == GraphType::Kind::Cycle && m >= 2 && st.front() == st.back()) hit = st.front();
    }
    if (hit < 0) break;
    reducible = true;
    GaussCode next;
    next.kind = code.kind;
    next.rotation = code.rotation;
    std::vector<int> remap(code.flags.size(), -1);
    int id = 0;
    for (std::size_t c = 0; c < code.flags.size(); ++c)
      if (static_cast<int>(c) != hit) {
        remap[c] = id++;
        next.flags.push_back(code.flags[c]);
      }
    for (const auto& st : code.strands) {
      std::vector<int> ns;
      for (int c : st)
        if (c != hit) ns.push_back(remap[c]);
      next.strands.push_back(std::move(ns));
    }
    code = std::move(next);
  }
  return ShadowReduction{make_shadow(code), reducible};
}

}  // namespace stickforge

#endif  // STICKFORGE_SHADOW_HPP
