#ifndef STICKFORGE_LAURENT_HPP
#define STICKFORGE_LAURENT_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stickforge {

/// Laurent polynomial in one variable with exact integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
template <typename Coeff>
class BasicLaurent {
public:
  using Term = std::pair<int, Coeff>;

  BasicLaurent() = default;
  BasicLaurent(Coeff c) {  // NOLINT: constants convert implicitly
    if (c != 0) terms_.emplace_back(0, c);
  }
  BasicLaurent(std::initializer_list<Term> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }

  static BasicLaurent monomial(int exponent, Coeff c = 1) {
    BasicLaurent p;
    if (c != 0) p.terms_.emplace_back(exponent, c);
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exponent() const { return terms_.empty() ? 0 : terms_.back().first; }
  Coeff leading() const { return terms_.empty() ? Coeff{0} : terms_.back().second; }

  Coeff coeff(int exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exponent) ? it->second : Coeff{0};
  }

  void add_term(int exponent, Coeff c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, Term{exponent, c});
    }
  }

  /// Multiply by c * x^shift.
  BasicLaurent scaled(int shift, Coeff c = 1) const {
    BasicLaurent r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, v] : terms_) r.terms_.emplace_back(e + shift, v * c);
    return r;
  }

  /// p(x) -> p(x^k); k = -1 gives the mirror substitution x -> 1/x.
  BasicLaurent substitute_power(int k) const {
    BasicLaurent r;
    for (const auto& [e, v] : terms_) r.add_term(e * k, v);
    return r;
  }

  BasicLaurent operator-() const { return scaled(0, Coeff{-1}); }

  BasicLaurent& operator+=(const BasicLaurent& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        Coeff s = a->second + b->second;
        if (s != 0) out.emplace_back(a->first, s);
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  BasicLaurent& operator-=(const BasicLaurent& o) { return *this += -o; }

  friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) { return a += b; }
  friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) { return a -= b; }

  friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
    BasicLaurent r;
    for (const auto& [ea, ca] : a.terms_) r += b.scaled(ea, ca);
    return r;
  }
  BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

  /// Exact division; throws if `d` does not divide this polynomial.
  BasicLaurent divided_exactly_by(const BasicLaurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    BasicLaurent rem = *this;
    BasicLaurent q;
    const int lowest = min_exponent() - d.min_exponent();
    while (!rem.is_zero()) {
      const int e = rem.max_exponent() - d.max_exponent();
      if (e < lowest || rem.leading() % d.leading() != 0)
        throw std::domain_error("polynomial division is not exact");
      const Coeff f = rem.leading() / d.leading();
      q.add_term(e, f);
      rem -= d.scaled(e, f);
    }
    return q;
  }

  /// Evaluate at an integer point. Negative exponents are only allowed at
  /// x = +-1, which is all the determinant needs.
  Coeff evaluate(Coeff x) const {
    Coeff sum = 0;
    for (const auto& [e, c] : terms_) {
      if (e < 0 && x != 1 && x != -1) throw std::domain_error("evaluate: negative exponent at non-unit");
      Coeff p = 1;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= x;
      sum += c * p;
    }
    return sum;
  }

  friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicLaurent& a, const BasicLaurent& b) { return !(a == b); }

  /// Lexicographic order on the (exponent, coefficient) term sequence.
  friend bool operator<(const BasicLaurent& a, const BasicLaurent& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
  }

  /// Human-readable form, e.g. "A^-4 - 2 + 3*A^4".
  std::string to_string(const std::string& var = "A") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Coeff mag = c < 0 ? Coeff{-c} : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (e == 0) {
        os << mag;
      } else {
        if (mag != 1) os << mag << "*";
        os << var;
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }

  /// Compact machine form "e:c,e:c,..." used in fingerprints and JSON.
  std::string serialize() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) os << ",";
      os << terms_[i].first << ":" << terms_[i].second;
    }
    return os.str();
  }

  static BasicLaurent deserialize(const std::string& s) {
    BasicLaurent p;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      const std::string tok = s.substr(pos, comma - pos);
      const std::size_t colon = tok.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("bad polynomial term '" + tok + "'");
      p.add_term(std::stoi(tok.substr(0, colon)), static_cast<Coeff>(std::stoll(tok.substr(colon + 1))));
      pos = comma + 1;
    }
    return p;
  }

private:
  std::vector<Term> terms_;
};

using LaurentPoly = BasicLaurent<std::int64_t>;

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const BasicLaurent<Coeff>& p) {
  return os << p.to_string();
}

}  // namespace stickforge

#endif  // STICKFORGE_LAURENT_HPP
