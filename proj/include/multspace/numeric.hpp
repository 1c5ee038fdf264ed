#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace multspace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bad arguments supplied by a caller (wrong sizes, non-dominant weights, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A configured size limit was exceeded.
struct SizeLimitError : std::length_error {
  using std::length_error::length_error;
};

/// An internal identity that must hold exactly did not (inexact division,
/// negative multiplicity, failed commutator). Signals a bug, not bad input.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Divides exactly or throws ConsistencyError naming `what`.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw ConsistencyError(what + ": inexact division " + num.str() + " / " + den.str());
  return q;
}

inline BigInt to_integer(const Rational& q, const std::string& what) {
  if (boost::multiprecision::denominator(q) != 1)
    throw ConsistencyError(what + ": non-integral value " + q.str());
  return boost::multiprecision::numerator(q);
}

}  // namespace multspace
