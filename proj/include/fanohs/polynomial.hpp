#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fanohs/rational.hpp"

namespace fanohs {

// Dense univariate polynomial over Q in the line parameter s.  Trailing zero
// coefficients are trimmed; the zero polynomial has an empty coefficient
// vector and degree -1.
class UniPolynomial {
public:
  UniPolynomial() = default;
  explicit UniPolynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
  }
  UniPolynomial(std::initializer_list<Rational> coeffs)
      : coeffs_(coeffs) {
    trim();
  }
  explicit UniPolynomial(QVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPolynomial variable() { return UniPolynomial({rat(0), rat(1)}); }
  // A + B*s
  static UniPolynomial linear(const Rational& a, const Rational& b) {
    return UniPolynomial({a, b});
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return rat(0);
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const Rational& leading() const { return coeffs_.back(); }
  const QVec& coeffs() const { return coeffs_; }

  UniPolynomial operator+(const UniPolynomial& o) const;
  UniPolynomial operator-(const UniPolynomial& o) const;
  UniPolynomial operator*(const UniPolynomial& o) const;
  UniPolynomial operator-() const;
  UniPolynomial scaled(const Rational& c) const;
  UniPolynomial pow(unsigned e) const;
  UniPolynomial derivative() const;
  Rational eval(const Rational& s0) const;

  bool operator==(const UniPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPolynomial& o) const { return !(*this == o); }

  // Euclidean division; divisor must be nonzero.
  static void divmod(const UniPolynomial& a, const UniPolynomial& b,
                     UniPolynomial& q, UniPolynomial& r);
  // Monic gcd.
  static UniPolynomial gcd(UniPolynomial a, UniPolynomial b);

  UniPolynomial monic() const;

  std::string to_string(const std::string& var = "s") const;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  QVec coeffs_;
};

}  // namespace fanohs
