#pragma once

#include <string>

#include "fanohs/polynomial.hpp"

namespace fanohs {

// Univariate rational function in s, kept normalized: gcd(num, den) = 1 and
// den monic.  Equality is therefore syntactic identity of num and den.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(rat(1)) {}
  explicit RationalFunction(const Rational& c)
      : num_(UniPolynomial(c)), den_(UniPolynomial(rat(1))) {}
  explicit RationalFunction(const UniPolynomial& p)
      : num_(p), den_(UniPolynomial(rat(1))) {}
  RationalFunction(UniPolynomial num, UniPolynomial den);

  static RationalFunction variable() {
    return RationalFunction(UniPolynomial::variable());
  }

  const UniPolynomial& num() const { return num_; }
  const UniPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) {
    *this = *this + o;
    return *this;
  }

  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // Equality decided by cross-multiplication; agrees with operator== on
  // normalized values.
  bool equals_cross(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }

  RationalFunction inverse() const;
  RationalFunction derivative() const;

  bool has_pole_at(const Rational& s0) const { return den_.eval(s0) == 0; }
  Rational eval(const Rational& s0) const;
  Rational value_at_zero() const { return eval(rat(0)); }
  // f'(0) by the quotient rule on the normalized num/den.
  Rational derivative_at_zero() const;

  std::string to_string(const std::string& var = "s") const;

private:
  UniPolynomial num_;
  UniPolynomial den_;
};

}  // namespace fanohs
