#pragma once

#include "multspace/numeric.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace multspace {

/// Sparse Laurent polynomial in one variable u with big-integer coefficients.
/// Zero coefficients are never stored, so two equal polynomials compare equal
/// structurally.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, BigInt>;

  LaurentPolynomial() = default;
  LaurentPolynomial(const BigInt& c) { add_term(0, c); }  // NOLINT: implicit constant
  LaurentPolynomial(int c) : LaurentPolynomial(BigInt(c)) {}  // NOLINT
  LaurentPolynomial(std::initializer_list<std::pair<long, long>> terms) {
    for (auto [e, c] : terms) add_term(e, c);
  }

  static LaurentPolynomial monomial(long exp, const BigInt& coeff = 1) {
    LaurentPolynomial p;
    p.add_term(exp, coeff);
    return p;
  }

  /// 1 + u + ... + u^{n-1}
  static LaurentPolynomial q_integer(unsigned n) {
    LaurentPolynomial p;
    for (unsigned i = 0; i < n; ++i) p.add_term(i, 1);
    return p;
  }

  /// prod_{i=1}^{n} (1 + u + ... + u^{i-1})
  static LaurentPolynomial q_factorial(unsigned n) {
    LaurentPolynomial p = 1;
    for (unsigned i = 1; i <= n; ++i) p *= q_integer(i);
    return p;
  }

  void add_term(long exp, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  std::optional<long> min_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }
  std::optional<long> max_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
  }

  bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }
  bool has_nonnegative_coefficients() const {
    for (const auto& [e, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  BigInt evaluate_at_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  /// p(u) -> p(u^{-1})
  LaurentPolynomial inverted() const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
  }

  /// p(u) -> u^k p(u)
  LaurentPolynomial shifted(long k) const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
  }

  /// Drops every term of degree > max_degree.
  LaurentPolynomial truncated(long max_degree) const {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms_) {
      if (e > max_degree) break;
      p.terms_.emplace(e, c);
    }
    return p;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator-(const LaurentPolynomial& a) {
    LaurentPolynomial p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace(e, -c);
    return p;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }
  friend LaurentPolynomial operator*(const BigInt& s, const LaurentPolynomial& a) {
    LaurentPolynomial p;
    if (s == 0) return p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace(e, s * c);
    return p;
  }

  /// Product truncated above max_degree; avoids materializing high terms.
  static LaurentPolynomial multiply_truncated(const LaurentPolynomial& a, const LaurentPolynomial& b,
                                              long max_degree) {
    LaurentPolynomial p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        if (ea + eb > max_degree) break;
        p.add_term(ea + eb, ca * cb);
      }
    return p;
  }

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Human-readable form, ascending exponents: "1 + 2u + u^2", "u^-1", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != 1) os << mag;
      os << "u";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

/// Power series prod_{i=1}^{m} (1 - u^i)^{-1} truncated above max_degree: the
/// Hilbert series of the ring of symmetric polynomials in m variables.
inline LaurentPolynomial symmetric_invariants_series(unsigned m, long max_degree) {
  LaurentPolynomial p = 1;
  if (max_degree < 0) return {};
  for (unsigned i = 1; i <= m; ++i) {
    // multiply by 1/(1-u^i): running sums with stride i
    LaurentPolynomial q;
    std::map<long, BigInt> acc;
    for (long d = 0; d <= max_degree; ++d) {
      BigInt v = p.coeff(d);
      if (d >= static_cast<long>(i)) v += acc[d - i];
      acc[d] = v;
      q.add_term(d, v);
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace multspace
