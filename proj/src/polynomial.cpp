#include "fanohs/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace fanohs {

UniPolynomial UniPolynomial::operator+(const UniPolynomial& o) const {
  QVec out(std::max(coeffs_.size(), o.coeffs_.size()), rat(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
  }
  return UniPolynomial(std::move(out));
}

UniPolynomial UniPolynomial::operator-(const UniPolynomial& o) const {
  return *this + (-o);
}

UniPolynomial UniPolynomial::operator-() const {
  QVec out(coeffs_);
  for (auto& c : out) c = -c;
  return UniPolynomial(std::move(out));
}

UniPolynomial UniPolynomial::operator*(const UniPolynomial& o) const {
  if (is_zero() || o.is_zero()) return UniPolynomial();
  QVec out(coeffs_.size() + o.coeffs_.size() - 1, rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return UniPolynomial(std::move(out));
}

UniPolynomial UniPolynomial::scaled(const Rational& c) const {
  if (c == 0) return UniPolynomial();
  QVec out(coeffs_);
  for (auto& x : out) x *= c;
  return UniPolynomial(std::move(out));
}

UniPolynomial UniPolynomial::pow(unsigned e) const {
  UniPolynomial acc(rat(1));
  UniPolynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

UniPolynomial UniPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return UniPolynomial();
  QVec out(coeffs_.size() - 1, rat(0));
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * rat(static_cast<long>(i));
  }
  return UniPolynomial(std::move(out));
}

Rational UniPolynomial::eval(const Rational& s0) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * s0 + *it;
  }
  return acc;
}

void UniPolynomial::divmod(const UniPolynomial& a, const UniPolynomial& b,
                           UniPolynomial& q, UniPolynomial& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  QVec rem = a.coeffs_;
  QVec quot;
  int db = b.degree();
  if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db) + 1, rat(0));
  for (int d = a.degree(); d >= db; --d) {
    Rational c = rem[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    Rational f = c / b.leading();
    quot[static_cast<std::size_t>(d - db)] = f;
    for (int i = 0; i <= db; ++i) {
      rem[static_cast<std::size_t>(d - db + i)] -= f * b.coeff(i);
    }
  }
  if (!rem.empty()) rem.resize(std::min<std::size_t>(rem.size(), static_cast<std::size_t>(db > 0 ? db : 0)));
  q = UniPolynomial(std::move(quot));
  r = UniPolynomial(std::move(rem));
}

UniPolynomial UniPolynomial::gcd(UniPolynomial a, UniPolynomial b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  while (!b.is_zero()) {
    UniPolynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

UniPolynomial UniPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1 / leading()));
}

std::string UniPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational ac = abs(c);
    if (i == 0 || ac != 1) os << fanohs::to_string(ac) << (i > 0 ? "*" : "");
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace fanohs
