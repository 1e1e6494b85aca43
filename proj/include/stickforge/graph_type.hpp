#ifndef STICKFORGE_GRAPH_TYPE_HPP
#define STICKFORGE_GRAPH_TYPE_HPP

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stickforge {

/// A configured size ceiling (sticks, crossings) was exceeded.
class CeilingExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Abstract graph drawn with sticks.
///
/// Vertex numbering: a cycle uses 0..n-1 in order. A bouquet puts the
/// 4-valent vertex x at 0, then the interior vertices of loop 1, then those
/// of loop 2. A theta-curve puts u at 0 and w at 1, then the interior
/// vertices of each edge in turn. Sticks are numbered along the strands
/// (the cycle, the loops, or the edges from u to w).
class GraphType {
public:
  enum class Kind { Cycle, Bouquet, Theta };

  static GraphType cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 sticks");
    return GraphType(Kind::Cycle, {n});
  }
  static GraphType bouquet(int p, int q) {
    if (p < 3 || q < 3) throw std::invalid_argument("bouquet loops need at least 3 sticks each");
    return GraphType(Kind::Bouquet, {p, q});
  }
  static GraphType theta(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("theta edges need at least 1 stick each");
    return GraphType(Kind::Theta, {a, b, c});
  }

  /// "cycle(6)", "bouquet(3,4)", "theta(2,2,2)".
  static GraphType parse(const std::string& text) {
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw std::invalid_argument("bad graph type '" + text + "'");
    const std::string name = text.substr(0, open);
    std::vector<int> args;
    std::stringstream ss(text.substr(open + 1, close - open - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) args.push_back(std::stoi(tok));
    if (name == "cycle" && args.size() == 1) return cycle(args[0]);
    if (name == "bouquet" && args.size() == 2) return bouquet(args[0], args[1]);
    if (name == "theta" && args.size() == 3) return theta(args[0], args[1], args[2]);
    throw std::invalid_argument("bad graph type '" + text + "'");
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<int>& sizes() const noexcept { return sizes_; }
  int total_sticks() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }

  int vertex_count() const {
    switch (kind_) {
      case Kind::Cycle: return sizes_[0];
      case Kind::Bouquet: return sizes_[0] + sizes_[1] - 1;
      case Kind::Theta: return total_sticks() - 1;
    }
    return 0;
  }

  /// Each strand as its vertex path; a cycle's path returns to vertex 0.
  std::vector<std::vector<int>> strands() const {
    std::vector<std::vector<int>> out;
    switch (kind_) {
      case Kind::Cycle: {
        std::vector<int> path(sizes_[0]);
        std::iota(path.begin(), path.end(), 0);
        path.push_back(0);
        out.push_back(path);
        break;
      }
      case Kind::Bouquet: {
        int next = 1;
        for (int loop = 0; loop < 2; ++loop) {
          std::vector<int> path{0};
          for (int i = 1; i < sizes_[loop]; ++i) path.push_back(next++);
          path.push_back(0);
          out.push_back(path);
        }
        break;
      }
      case Kind::Theta: {
        int next = 2;
        for (int e = 0; e < 3; ++e) {
          std::vector<int> path{0};
          for (int i = 1; i < sizes_[e]; ++i) path.push_back(next++);
          path.push_back(1);
          out.push_back(path);
        }
        break;
      }
    }
    return out;
  }

  /// Stick endpoints (from, to) in traversal order.
  std::vector<std::array<int, 2>> sticks() const {
    std::vector<std::array<int, 2>> out;
    for (const auto& path : strands())
      for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back({path[i], path[i + 1]});
    return out;
  }

  /// Strand index of each stick.
  std::vector<int> stick_strand() const {
    std::vector<int> out;
    for (std::size_t s = 0; s < sizes_.size(); ++s)
      for (int i = 0; i < sizes_[s]; ++i) out.push_back(static_cast<int>(s));
    return out;
  }

  bool adjacent(int i, int j) const {
    const auto st = sticks();
    const auto& a = st[i];
    const auto& b = st[j];
    return a[0] == b[0] || a[0] == b[1] || a[1] == b[0] || a[1] == b[1];
  }

  /// For each stick, how many other sticks share an endpoint with it.
  std::vector<int> adjacency_counts() const {
    const auto st = sticks();
    std::vector<int> out(st.size(), 0);
    for (std::size_t i = 0; i < st.size(); ++i)
      for (std::size_t j = 0; j < st.size(); ++j)
        if (i != j && (st[i][0] == st[j][0] || st[i][0] == st[j][1] || st[i][1] == st[j][0] || st[i][1] == st[j][1])) ++out[i];
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << (kind_ == Kind::Cycle ? "cycle" : kind_ == Kind::Bouquet ? "bouquet" : "theta") << "(";
    for (std::size_t i = 0; i < sizes_.size(); ++i) os << (i ? "," : "") << sizes_[i];
    os << ")";
    return os.str();
  }

  friend bool operator==(const GraphType& a, const GraphType& b) { return a.kind_ == b.kind_ && a.sizes_ == b.sizes_; }

private:
  GraphType(Kind k, std::vector<int> sizes) : kind_(k), sizes_(std::move(sizes)) {}

  Kind kind_;
  std::vector<int> sizes_;
};

}  // namespace stickforge

#endif  // STICKFORGE_GRAPH_TYPE_HPP
