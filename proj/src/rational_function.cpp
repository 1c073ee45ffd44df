#include "fanohs/rational_function.hpp"

namespace fanohs {

RationalFunction::RationalFunction(UniPolynomial num, UniPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPolynomial(rat(1));
    return;
  }
  UniPolynomial g = UniPolynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    UniPolynomial q, r;
    UniPolynomial::divmod(num_, g, q, r);
    num_ = q;
    UniPolynomial::divmod(den_, g, q, r);
    den_ = q;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1 / lead);
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(
      num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& s0) const {
  Rational d = den_.eval(s0);
  if (d == 0) {
    throw PoleError("pole at s = " + fanohs::to_string(s0) + " of factor " +
                    den_.to_string());
  }
  return Rational(num_.eval(s0) / d);
}

Rational RationalFunction::derivative_at_zero() const {
  Rational d0 = den_.eval(rat(0));
  if (d0 == 0) {
    throw PoleError("non-cancellation: pole at s = 0 of factor " +
                    den_.to_string());
  }
  Rational n0 = num_.eval(rat(0));
  Rational n1 = num_.derivative().eval(rat(0));
  Rational d1 = den_.derivative().eval(rat(0));
  return Rational((n1 * d0 - n0 * d1) / (d0 * d0));
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_.degree() == 0) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace fanohs
