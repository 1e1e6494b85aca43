#ifndef STICKFORGE_ENUMERATOR_HPP
#define STICKFORGE_ENUMERATOR_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "diagram.hpp"
#include "graph_type.hpp"
#include "shadow.hpp"

namespace stickforge {

inline constexpr int kDefaultStickCeiling = 8;

/// Which sticks cross and in what order.
///
/// A complete pattern fixes every crossing pair and every stick's order. A
/// lead-stick case (complete = false) fixes only the sticks crossing stick 0
/// and their order along it, as in the "(3 4 5)" notation, where sticks are
/// numbered from 1.
struct CrossingPattern {
  GraphType graph_type = GraphType::cycle(3);
  std::vector<std::array<int, 2>> pairs;
  std::vector<std::vector<int>> order;  // partner sticks along each stick
  bool complete = true;

  /// "(3 4 5)" for lead-stick cases; the full order table otherwise.
  std::string to_string() const {
    std::ostringstream os;
    auto seq = [&](const std::vector<int>& s) {
      os << "(";
      for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i] + 1;
      os << ")";
    };
    if (!complete) {
      seq(order.empty() ? std::vector<int>{} : order[0]);
      return os.str();
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i) os << " ";
      os << i + 1 << ":";
      seq(order[i]);
    }
    return os.str();
  }

  friend bool operator==(const CrossingPattern& a, const CrossingPattern& b) {
    return a.graph_type == b.graph_type && a.pairs == b.pairs && a.order == b.order && a.complete == b.complete;
  }
};

inline CrossingPattern pattern_of(const GraphType& g, const Layout& lay) {
  CrossingPattern p;
  p.graph_type = g;
  p.pairs = lay.pairs;
  std::sort(p.pairs.begin(), p.pairs.end());
  p.order.assign(lay.order.size(), {});
  for (std::size_t s = 0; s < lay.order.size(); ++s)
    for (int c : lay.order[s]) p.order[s].push_back(lay.pairs[c][0] == static_cast<int>(s) ? lay.pairs[c][1] : lay.pairs[c][0]);
  p.complete = true;
  return p;
}

/// A graph symmetry acting on sticks: stick i goes to map[i], reversed if flip[i].
struct StickSymmetry {
  std::vector<int> map;
  std::vector<bool> flip;
};

inline std::vector<StickSymmetry> stick_automorphisms(const GraphType& g) {
  std::vector<StickSymmetry> out;
  const int n = g.total_sticks();
  const auto& sz = g.sizes();
  switch (g.kind()) {
    case GraphType::Kind::Cycle:
      for (int r = 0; r < n; ++r) {
        StickSymmetry a{std::vector<int>(n), std::vector<bool>(n, false)};
        StickSymmetry b{std::vector<int>(n), std::vector<bool>(n, true)};
        for (int i = 0; i < n; ++i) {
          a.map[i] = (i + r) % n;
          b.map[i] = ((r - i - 1) % n + n) % n;
        }
        out.push_back(a);
        out.push_back(b);
      }
      break;
    case GraphType::Kind::Bouquet:
      for (int swap = 0; swap < (sz[0] == sz[1] ? 2 : 1); ++swap)
        for (int rev = 0; rev < 4; ++rev) {
          StickSymmetry s{std::vector<int>(n), std::vector<bool>(n, false)};
          for (int loop = 0; loop < 2; ++loop) {
            const int target = swap ? 1 - loop : loop;
            const int base_src = loop == 0 ? 0 : sz[0];
            const int base_dst = target == 0 ? 0 : sz[0];
            const bool r = (rev >> loop) & 1;
            for (int k = 0; k < sz[loop]; ++k) {
              s.map[base_src + k] = base_dst + (r ? sz[loop] - 1 - k : k);
              s.flip[base_src + k] = r;
            }
          }
          out.push_back(s);
        }
      break;
    case GraphType::Kind::Theta: {
      std::array<int, 3> perm{0, 1, 2};
      const std::array<int, 3> base{0, sz[0], sz[0] + sz[1]};
      do {
        if (sz[perm[0]] != sz[0] || sz[perm[1]] != sz[1] || sz[perm[2]] != sz[2]) continue;
        for (int swap = 0; swap < 2; ++swap) {
          StickSymmetry s{std::vector<int>(n), std::vector<bool>(n, swap != 0)};
          for (int e = 0; e < 3; ++e)
            for (int k = 0; k < sz[e]; ++k) s.map[base[e] + k] = base[perm[e]] + (swap ? sz[e] - 1 - k : k);
          out.push_back(s);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
  }
  return out;
}

/// Lead-stick cases: every set of sticks crossing stick 0 with every order
/// along it, one representative per orbit of the symmetries fixing stick 0.
inline std::vector<CrossingPattern> enumerate_patterns(const GraphType& g, int stick_ceiling = kDefaultStickCeiling) {
  const int n = g.total_sticks();
  if (n > stick_ceiling)
    throw CeilingExceeded(std::to_string(n) + " sticks exceeds the ceiling of " + std::to_string(stick_ceiling));
  std::vector<int> candidates;
  for (int j = 1; j < n; ++j)
    if (!g.adjacent(0, j)) candidates.push_back(j);
  std::vector<StickSymmetry> stab;
  for (auto& s : stick_automorphisms(g))
    if (s.map[0] == 0) stab.push_back(s);

  std::vector<CrossingPattern> out;
  const int m = static_cast<int>(candidates.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> seq;
    for (int k = 0; k < m; ++k)
      if (mask >> k & 1) seq.push_back(candidates[k]);
    do {
      bool canonical = true;
      for (const auto& s : stab) {
        std::vector<int> img;
        for (int x : seq) img.push_back(s.map[x]);
        if (s.flip[0]) std::reverse(img.begin(), img.end());
        if (img < seq) {
          canonical = false;
          break;
        }
      }
      if (!canonical) continue;
      CrossingPattern p;
      p.graph_type = g;
      p.complete = false;
      p.order.assign(n, {});
      p.order[0] = seq;
      for (int x : seq) p.pairs.push_back({0, x});
      std::sort(p.pairs.begin(), p.pairs.end());
      out.push_back(std::move(p));
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
  return out;
}

namespace enum_detail {

/// Depth-first placement of vertices on a grid with stick 0 pinned to
/// (0,0)-(G,0) and the next placed vertex kept in the closed upper half-plane.
class PlacementSearch {
public:
  using PairCheck = std::function<bool(int, int, bool)>;  // sticks s < t, crossing? -> keep branch

  PlacementSearch(const GraphType& g, int grid) : g_(g), grid_(grid), sticks_(g.sticks()) {
    const int nv = g.vertex_count();
    pinned_a_ = sticks_[0][0];
    pinned_b_ = sticks_[0][1];
    std::vector<bool> placed(nv, false);
    placed[pinned_a_] = placed[pinned_b_] = true;
    for (const auto& path : g.strands())
      for (int v : path)
        if (!placed[v]) {
          placed[v] = true;
          order_.push_back(v);
        }
    // sticks completed when each free vertex is placed
    std::vector<int> step_of(nv, -1);
    for (std::size_t k = 0; k < order_.size(); ++k) step_of[order_[k]] = static_cast<int>(k);
    completes_.assign(order_.size(), {});
    for (std::size_t s = 1; s < sticks_.size(); ++s) {
      const int k = std::max(step_of[sticks_[s][0]], step_of[sticks_[s][1]]);
      if (k >= 0) completes_[k].push_back(static_cast<int>(s));
    }
    for (int x = -grid; x <= 2 * grid; ++x)
      for (int y = -grid; y <= 2 * grid; ++y) candidates_.push_back(GridPoint{x, y});
    // search outward from the middle of the box so small drawings come first
    const std::int64_t cx = grid / 2, cy = grid / 4;
    std::stable_sort(candidates_.begin(), candidates_.end(), [&](const GridPoint& a, const GridPoint& b) {
      const auto da = std::max(std::llabs(a.x - cx), std::llabs(a.y - cy));
      const auto db = std::max(std::llabs(b.x - cx), std::llabs(b.y - cy));
      if (da != db) return da < db;
      return a < b;
    });
  }

  int free_count() const { return static_cast<int>(order_.size()); }
  const std::vector<GridPoint>& candidates() const { return candidates_; }

  /// Visits every general-position-so-far placement; `first_range` limits
  /// the candidate indices tried for the first free vertex.
  void run(const PairCheck& check, const std::function<bool(const std::vector<GridPoint>&)>& leaf, std::size_t first_begin,
           std::size_t first_end, std::uint64_t node_budget, std::uint64_t& nodes) {
    std::vector<GridPoint> v(g_.vertex_count());
    v[pinned_a_] = GridPoint{0, 0};
    v[pinned_b_] = GridPoint{grid_, 0};
    std::vector<bool> done(sticks_.size(), false);
    done[0] = true;
    stop_ = false;
    if (order_.empty()) {
      leaf(v);
      return;
    }
    dfs(0, v, done, check, leaf, first_begin, first_end, node_budget, nodes);
  }

  bool budget_hit() const { return budget_hit_; }

private:
  bool stick_ok(int s, int t, const std::vector<GridPoint>& v, bool& crossing) const {
    crossing = false;
    const auto& a = sticks_[s];
    const auto& b = sticks_[t];
    int shared = -1, cnt = 0;
    for (int x : a)
      for (int y : b)
        if (x == y) shared = x, ++cnt;
    if (cnt == 2) return false;
    if (cnt == 1) {
      const int pa = a[0] == shared ? a[1] : a[0];
      const int pb = b[0] == shared ? b[1] : b[0];
      const GridPoint da = v[pa] - v[shared], db = v[pb] - v[shared];
      return !(cross(da, db) == 0 && da.x * db.x + da.y * db.y > 0);
    }
    const auto k = intersection_kind(BasicStick<std::int64_t>{v[a[0]], v[a[1]]}, BasicStick<std::int64_t>{v[b[0]], v[b[1]]});
    if (k == IntersectionKind::Degenerate) return false;
    crossing = k == IntersectionKind::Proper;
    return true;
  }

  void dfs(std::size_t step, std::vector<GridPoint>& v, std::vector<bool>& done, const PairCheck& check,
           const std::function<bool(const std::vector<GridPoint>&)>& leaf, std::size_t first_begin, std::size_t first_end,
           std::uint64_t budget, std::uint64_t& nodes) {
    const int vert = order_[step];
    const std::size_t lo = step == 0 ? first_begin : 0;
    const std::size_t hi = step == 0 ? std::min(first_end, candidates_.size()) : candidates_.size();
    for (std::size_t ci = lo; ci < hi && !stop_; ++ci) {
      const GridPoint p = candidates_[ci];
      if (step == 0 && p.y < 0) continue;
      if (budget && ++nodes > budget) {
        budget_hit_ = true;
        stop_ = true;
        return;
      }
      bool clash = p == v[pinned_a_] || p == v[pinned_b_];
      for (std::size_t k = 0; k < step && !clash; ++k) clash = v[order_[k]] == p;
      if (clash) continue;
      v[vert] = p;
      bool ok = true;
      for (int s : completes_[step]) {
        for (std::size_t t = 0; t < sticks_.size() && ok; ++t) {
          if (!done[t]) continue;
          bool crossing = false;
          ok = stick_ok(static_cast<int>(t), s, v, crossing) && check(static_cast<int>(t), s, crossing);
        }
        if (!ok) break;
        done[s] = true;
      }
      if (ok) {
        if (step + 1 == order_.size()) {
          if (!leaf(v)) stop_ = true;
        } else {
          dfs(step + 1, v, done, check, leaf, first_begin, first_end, budget, nodes);
        }
      }
      for (int s : completes_[step]) done[s] = false;
    }
  }

  GraphType g_;
  std::int64_t grid_;
  std::vector<std::array<int, 2>> sticks_;
  int pinned_a_ = 0, pinned_b_ = 1;
  std::vector<int> order_;
  std::vector<std::vector<int>> completes_;
  std::vector<GridPoint> candidates_;
  bool stop_ = false;
  bool budget_hit_ = false;
};

inline bool matches(const CrossingPattern& want, const CrossingPattern& got) {
  if (want.complete) return want.pairs == got.pairs && want.order == got.order;
  return got.order[0] == want.order[0];
}

}  // namespace enum_detail

struct RealizationResult {
  CrossingPattern pattern;
  std::optional<StickDiagram> diagram;  // set when realized
  std::vector<GridPoint> coords;
  int grid = 0;
  bool budget_exhausted = false;  // unrealized because the node budget ran out

  bool realized() const noexcept { return diagram.has_value(); }
};

/// Searches the grid for a diagram with the requested crossing pattern.
/// Failure means unrealized at this grid (or within the node budget), never
/// that the pattern is impossible.
inline RealizationResult realize(const CrossingPattern& pattern, int grid, std::uint64_t node_budget = 200'000'000) {
  if (grid < 4) throw std::invalid_argument("realize: grid must be at least 4");
  const GraphType& g = pattern.graph_type;
  RealizationResult res;
  res.pattern = pattern;
  res.grid = grid;
  std::set<std::array<int, 2>> want(pattern.pairs.begin(), pattern.pairs.end());
  for (const auto& pr : pattern.pairs)
    if (g.adjacent(pr[0], pr[1])) throw std::invalid_argument("realize: pattern asks adjacent sticks to cross");

  enum_detail::PlacementSearch search(g, grid);
  auto check = [&](int s, int t, bool crossing) {
    if (!pattern.complete && s != 0) return true;
    return want.count({s, t}) == (crossing ? 1U : 0U);
  };
  auto leaf = [&](const std::vector<GridPoint>& v) {
    auto lay = analyze_layout(g, v);
    if (!lay) return true;
    if (!enum_detail::matches(pattern, pattern_of(g, *lay))) return true;
    res.coords = v;
    res.diagram = build_diagram(g, v);
    return false;
  };
  std::uint64_t nodes = 0;
  search.run(check, leaf, 0, search.candidates().size(), node_budget, nodes);
  res.budget_exhausted = !res.realized() && search.budget_hit();
  return res;
}

struct EnumerationOptions {
  int grid = 12;
  int exhaustive_grid = 0;                  // 0 picks the largest divisor of grid within exhaustive_budget
  std::uint64_t exhaustive_budget = 60'000'000;
  std::uint64_t samples = 4'000'000;        // random placements on the full grid
  std::uint64_t seed = 20240607;
  int slices = 64;                          // work units; results do not depend on jobs
  int jobs = 1;
  int stick_ceiling = kDefaultStickCeiling;
  std::function<void(const std::string&)> progress;
};

struct ShadowRecord {
  Shadow shadow;
  CrossingPattern pattern;
  bool reducible = false;
  Shadow reduced;
  std::vector<GridPoint> coords;  // a witness placement on the full grid
  int grid = 0;

  StickDiagram diagram() const { return build_diagram(pattern.graph_type, coords); }
};

namespace enum_detail {

inline std::string layout_key(const Layout& lay, const std::vector<int>& rotation) {
  std::string key;
  for (const auto& pr : lay.pairs) {
    key.push_back(static_cast<char>(pr[0]));
    key.push_back(static_cast<char>(pr[1]));
  }
  key.push_back('|');
  for (const auto& o : lay.order) {
    for (int c : o) key.push_back(static_cast<char>(c));
    key.push_back('/');
  }
  for (int f : lay.flags) key.push_back(f > 0 ? '+' : '-');
  key.push_back('|');
  for (int r : rotation) key.push_back(static_cast<char>(r + 8));
  return key;
}

/// Distinct shadows found by one unit of work, in discovery order.
struct Finds {
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<GridPoint>> witness;
  std::unordered_set<std::string> seen_layouts;

  void offer(const GraphType& g, const std::vector<GridPoint>& v, std::int64_t scale) {
    auto lay = analyze_layout(g, v);
    if (!lay) return;
    const auto rot = vertex_rotation(g, v);
    if (!seen_layouts.insert(layout_key(*lay, rot)).second) return;
    const Shadow s = make_shadow(gauss_code_of(g, *lay, rot));
    if (witness.count(s.text)) return;
    std::vector<GridPoint> w = v;
    for (auto& p : w) p = GridPoint{p.x * scale, p.y * scale};
    witness.emplace(s.text, std::move(w));
    order.push_back(s.text);
  }
};

inline void run_parallel(int jobs, int units, const std::function<void(int)>& work) {
  jobs = std::max(1, std::min(jobs, units));
  if (jobs == 1) {
    for (int u = 0; u < units; ++u) work(u);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (int u = next++; u < units; u = next++) work(u);
    });
  for (auto& t : pool) t.join();
}

inline int pick_exhaustive_grid(const GraphType& g, int grid, std::uint64_t budget) {
  const int free_vertices = g.vertex_count() - 2;
  int best = 1;
  for (int d = 1; d <= grid; ++d) {
    if (grid % d) continue;
    const double side = 3.0 * d + 1;
    double leaves = side * side / 2;
    for (int k = 1; k < free_vertices; ++k) leaves *= side * side;
    if (leaves <= static_cast<double>(budget)) best = d;
  }
  return best;
}

}  // namespace enum_detail

/// Shadows of the graph type found on the grid.
///
/// Two sweeps feed one canonical dedupe: an exhaustive sweep of a coarse
/// sub-lattice (step grid / exhaustive_grid) and seeded random placements
/// on the full grid, half of them local moves from shadows already found.
/// The result is a lower bound on the realizable shadows and is independent
/// of the number of jobs.
inline std::vector<ShadowRecord> enumerate_shadows(const GraphType& g, const EnumerationOptions& opt = {}) {
  if (g.total_sticks() > opt.stick_ceiling)
    throw CeilingExceeded(std::to_string(g.total_sticks()) + " sticks exceeds the ceiling of " + std::to_string(opt.stick_ceiling));
  if (opt.grid < 4) throw std::invalid_argument("enumerate_shadows: grid must be at least 4");
  const int G = opt.grid;
  const int g0 = opt.exhaustive_grid > 0 ? opt.exhaustive_grid : enum_detail::pick_exhaustive_grid(g, G, opt.exhaustive_budget);
  if (G % g0) throw std::invalid_argument("exhaustive grid must divide the grid");
  const std::int64_t scale = G / g0;
  auto note = [&](const std::string& s) {
    if (opt.progress) opt.progress(s);
  };

  // exhaustive coarse sweep, split over the first free vertex
  enum_detail::PlacementSearch coarse(g, g0);
  const int units_a = std::max(1, std::min<int>(opt.slices, static_cast<int>(coarse.candidates().size())));
  std::vector<enum_detail::Finds> part_a(units_a);
  const std::size_t nc = coarse.candidates().size();
  enum_detail::run_parallel(opt.jobs, units_a, [&](int u) {
    enum_detail::PlacementSearch local(g, g0);
    std::uint64_t nodes = 0;
    local.run([](int, int, bool) { return true; },
              [&](const std::vector<GridPoint>& v) {
                part_a[u].offer(g, v, scale);
                return true;
              },
              nc * u / units_a, nc * (u + 1) / units_a, 0, nodes);
  });
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<GridPoint>> witness;
  auto merge = [&](const enum_detail::Finds& f) {
    for (const auto& t : f.order)
      if (!witness.count(t)) {
        witness.emplace(t, f.witness.at(t));
        order.push_back(t);
      }
  };
  for (const auto& f : part_a) merge(f);
  note("exhaustive sweep at grid " + std::to_string(g0) + ": " + std::to_string(order.size()) + " shadows");

  // seeded random placements and local moves on the full grid
  std::vector<std::vector<GridPoint>> pool;
  for (const auto& t : order) pool.push_back(witness[t]);
  const int units_b = std::max(1, opt.slices);
  std::vector<enum_detail::Finds> part_b(units_b);
  const auto sticks = g.sticks();
  const int pinned_a = sticks[0][0], pinned_b = sticks[0][1];
  int half_plane = -1;
  for (const auto& path : g.strands()) {
    for (int v : path)
      if (v != pinned_a && v != pinned_b) {
        half_plane = v;
        break;
      }
    if (half_plane >= 0) break;
  }
  enum_detail::run_parallel(opt.jobs, units_b, [&](int u) {
    std::mt19937_64 rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(u));
    std::uniform_int_distribution<std::int64_t> coord(-G, 2 * G);
    auto& mine = part_b[u];
    std::vector<const std::vector<GridPoint>*> local_pool;
    for (const auto& w : pool) local_pool.push_back(&w);
    const std::uint64_t count = opt.samples / units_b + (static_cast<std::uint64_t>(u) < opt.samples % units_b ? 1 : 0);
    std::vector<GridPoint> v(g.vertex_count());
    for (std::uint64_t i = 0; i < count; ++i) {
      const bool local_move = !local_pool.empty() && (rng() & 1U);
      if (local_move) {
        v = *local_pool[rng() % local_pool.size()];
        const int moves = 1 + static_cast<int>(rng() % 2);
        for (int m = 0; m < moves; ++m) {
          int vert;
          do vert = static_cast<int>(rng() % v.size());
          while (vert == pinned_a || vert == pinned_b);
          const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % std::max(1, G / 3));
          std::uniform_int_distribution<std::int64_t> step(-r, r);
          v[vert].x = std::clamp<std::int64_t>(v[vert].x + step(rng), -G, 2 * G);
          v[vert].y = std::clamp<std::int64_t>(v[vert].y + step(rng), -G, 2 * G);
        }
      } else {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = GridPoint{coord(rng), coord(rng)};
      }
      v[pinned_a] = GridPoint{0, 0};
      v[pinned_b] = GridPoint{G, 0};
      if (v[half_plane].y < 0) continue;
      const std::size_t before = mine.order.size();
      mine.offer(g, v, 1);
      if (mine.order.size() > before) local_pool.push_back(&mine.witness.at(mine.order.back()));
    }
  });
  for (const auto& f : part_b) merge(f);
  note("random sweep at grid " + std::to_string(G) + ": " + std::to_string(order.size()) + " shadows");

  std::vector<ShadowRecord> out;
  for (const auto& t : order) {
    ShadowRecord r;
    r.coords = witness[t];
    r.grid = G;
    auto lay = analyze_layout(g, r.coords);
    r.pattern = pattern_of(g, *lay);
    r.shadow = make_shadow(gauss_code_of(g, *lay, vertex_rotation(g, r.coords)));
    const auto red = reduce_shadow(r.shadow);
    r.reducible = red.reducible;
    r.reduced = red.shadow;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const ShadowRecord& a, const ShadowRecord& b) {
    if (a.shadow.crossing_count() != b.shadow.crossing_count()) return a.shadow.crossing_count() < b.shadow.crossing_count();
    return a.shadow.text < b.shadow.text;
  });
  return out;
}

inline int max_crossings(const std::vector<ShadowRecord>& shadows) {
  int m = 0;
  for (const auto& s : shadows) m = std::max(m, s.shadow.crossing_count());
  return m;
}

inline int max_crossings(const GraphType& g, const EnumerationOptions& opt = {}) { return max_crossings(enumerate_shadows(g, opt)); }

enum class BouquetType { B0, B1, B2, B3 };

inline std::string to_string(BouquetType t) { return "B" + std::to_string(static_cast<int>(t)); }

/// Case analysis for 6-stick bouquet diagrams with triangle loop 1 as the
/// reference triangle; nullopt when the diagram falls outside every case.
inline std::optional<BouquetType> classify_bouquet6(const StickDiagram& d) {
  const auto& g = d.graph_type();
  if (g.kind() != GraphType::Kind::Bouquet || g.sizes()[0] != 3 || g.sizes()[1] != 3)
    throw std::invalid_argument("classify_bouquet6 needs a bouquet(3,3) diagram");
  const auto& v = d.vertices();
  // x = 0, loop 1 = x,1,2 ; loop 2 = x,3,4. Sticks: e1 = x-1, e3 = 1-2, e2 = 2-x, e4 = x-3, e6 = 3-4, e5 = 4-x
  const std::array<ExactPoint, 3> tri{v[0], v[1], v[2]};
  auto leaves_inside = [&](const ExactPoint& far) {
    // direction from x strictly inside the triangle's angle at x
    const int o = orientation(v[0], v[1], v[2]);
    return orientation(v[0], v[1], far) == o && orientation(v[0], far, v[2]) == o;
  };
  auto crosses = [&](int s, int t) {
    for (const auto& c : d.crossings())
      if ((c.i == s && c.j == t) || (c.i == t && c.j == s)) return true;
    return false;
  };
  const int e3 = 1, e4 = 3, e6 = 4, e5 = 5, e1 = 0, e2 = 2;
  const bool in4 = leaves_inside(v[3]);
  const bool in5 = leaves_inside(v[4]);
  const int hits6 = (crosses(e6, e1) ? 1 : 0) + (crosses(e6, e2) ? 1 : 0) + (crosses(e6, e3) ? 1 : 0);
  if (in4 && in5) {
    const int k = (crosses(e4, e3) ? 1 : 0) + (crosses(e5, e3) ? 1 : 0);
    return k == 0 ? BouquetType::B0 : BouquetType::B1;
  }
  if (!in4 && !in5) {
    if (crosses(e4, e3) || crosses(e5, e3)) return std::nullopt;
    if (hits6 == 0) return BouquetType::B0;
    if (hits6 == 2) return BouquetType::B1;
    return std::nullopt;
  }
  const int inner = in4 ? e4 : e5;
  const int inner_far = in4 ? 3 : 4;
  if (!crosses(inner, e3) && triangle_side(tri, v[inner_far]) == Side::Inside) return BouquetType::B2;
  if (crosses(inner, e3)) return hits6 == 0 ? BouquetType::B2 : BouquetType::B3;
  return std::nullopt;
}

}  // namespace stickforge

#endif  // STICKFORGE_ENUMERATOR_HPP
