#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "fanohs/errors.hpp"

namespace fanohs {

// Exact scalars are GMP rationals.  mpq_class keeps the canonical form
// (denominator > 0, gcd(num, den) = 1) through every ring operation as long
// as values are created through the helpers below.
using Rational = mpq_class;

using IntVec = std::vector<std::int64_t>;
using QVec = std::vector<Rational>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or "p"; used by every JSON surface.
inline Rational parse_rational(const std::string& text) {
  try {
    Rational r(text);
    if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("cannot parse rational '" + text + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational pow_rational(const Rational& x, std::int64_t e) {
  if (e == 0) return rat(1);
  if (x == 0) {
    if (e < 0) throw PoleError("0 raised to a negative power");
    return rat(0);
  }
  Rational base = e < 0 ? Rational(1 / x) : x;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e)
                          : static_cast<std::uint64_t>(e);
  Rational acc = rat(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

inline Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rational dot(const IntVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVec to_qvec(const IntVec& v) {
  QVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace fanohs
