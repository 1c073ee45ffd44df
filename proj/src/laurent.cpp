#include "fanohs/laurent.hpp"

#include <algorithm>

namespace fanohs {

namespace {
const RationalFunction kZeroRF{};
}

LaurentSeriesRF::LaurentSeriesRF(int lead, int trunc)
    : lead_(lead), trunc_(trunc) {
  if (lead_ <= trunc_) {
    coeffs_.assign(static_cast<std::size_t>(trunc_ - lead_ + 1),
                   RationalFunction{});
  }
  trim();
}

LaurentSeriesRF::LaurentSeriesRF(int lead, int trunc,
                                 std::vector<RationalFunction> coeffs)
    : lead_(lead), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (lead_ > trunc_ + 1 ||
      coeffs_.size() != static_cast<std::size_t>(trunc_ - lead_ + 1)) {
    throw DomainError("laurent series window/coefficient mismatch");
  }
  trim();
}

void LaurentSeriesRF::trim() {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip].is_zero()) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(),
                  coeffs_.begin() + static_cast<std::ptrdiff_t>(skip));
    lead_ += static_cast<int>(skip);
  }
}

LaurentSeriesRF LaurentSeriesRF::one(int trunc) {
  return constant(RationalFunction(rat(1)), trunc);
}

LaurentSeriesRF LaurentSeriesRF::constant(const RationalFunction& c,
                                          int trunc) {
  if (trunc < 0) throw DomainError("constant series needs trunc >= 0");
  std::vector<RationalFunction> coeffs(static_cast<std::size_t>(trunc) + 1,
                                       RationalFunction{});
  coeffs[0] = c;
  return LaurentSeriesRF(0, trunc, std::move(coeffs));
}

LaurentSeriesRF LaurentSeriesRF::exp_linear(const Rational& A,
                                            const Rational& B, int trunc) {
  if (trunc < 0) throw DomainError("exp series needs trunc >= 0");
  UniPolynomial u = UniPolynomial::linear(A, B);
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(static_cast<std::size_t>(trunc) + 1);
  UniPolynomial upow(rat(1));
  Rational factorial = rat(1);
  for (int k = 0; k <= trunc; ++k) {
    if (k > 0) {
      upow = upow * u;
      factorial *= rat(k);
    }
    coeffs.emplace_back(upow.scaled(Rational(1 / factorial)));
  }
  return LaurentSeriesRF(0, trunc, std::move(coeffs));
}

const RationalFunction& LaurentSeriesRF::coeff(int i) const {
  if (i > trunc_) throw DomainError("laurent coefficient beyond truncation");
  if (i < lead_) return kZeroRF;
  return coeffs_[static_cast<std::size_t>(i - lead_)];
}

LaurentSeriesRF LaurentSeriesRF::operator+(const LaurentSeriesRF& o) const {
  if (trunc_ != o.trunc_) {
    throw DomainError("refusing to add series with different truncations");
  }
  int lead = std::min(lead_, o.lead_);
  std::vector<RationalFunction> coeffs;
  if (lead <= trunc_) {
    coeffs.reserve(static_cast<std::size_t>(trunc_ - lead + 1));
    for (int i = lead; i <= trunc_; ++i) coeffs.push_back(coeff(i) + o.coeff(i));
  }
  return LaurentSeriesRF(lead, trunc_, std::move(coeffs));
}

LaurentSeriesRF LaurentSeriesRF::operator-(const LaurentSeriesRF& o) const {
  return *this + (-o);
}

LaurentSeriesRF LaurentSeriesRF::operator-() const {
  LaurentSeriesRF out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentSeriesRF LaurentSeriesRF::operator*(const LaurentSeriesRF& o) const {
  // Effective lead of an all-zero series for truncation bookkeeping.
  int l1 = coeffs_.empty() ? trunc_ + 1 : lead_;
  int l2 = o.coeffs_.empty() ? o.trunc_ + 1 : o.lead_;
  int trunc = std::min(trunc_ + l2, o.trunc_ + l1);
  int lead = l1 + l2;
  if (coeffs_.empty() || o.coeffs_.empty()) {
    return LaurentSeriesRF(trunc + 1, trunc, {});
  }
  std::vector<RationalFunction> coeffs;
  if (lead <= trunc) {
    coeffs.assign(static_cast<std::size_t>(trunc - lead + 1),
                  RationalFunction{});
    for (int i = lead_; i <= trunc_; ++i) {
      const RationalFunction& a = coeff(i);
      if (a.is_zero()) continue;
      for (int j = l2; j <= o.trunc_ && i + j <= trunc; ++j) {
        const RationalFunction& b = o.coeff(j);
        if (b.is_zero()) continue;
        coeffs[static_cast<std::size_t>(i + j - lead)] += a * b;
      }
    }
  }
  return LaurentSeriesRF(lead, trunc, std::move(coeffs));
}

LaurentSeriesRF LaurentSeriesRF::scaled(const RationalFunction& c) const {
  LaurentSeriesRF out = *this;
  for (auto& x : out.coeffs_) x = x * c;
  out.trim();
  return out;
}

LaurentSeriesRF LaurentSeriesRF::shifted(int k) const {
  LaurentSeriesRF out = *this;
  out.lead_ += k;
  out.trunc_ += k;
  return out;
}

LaurentSeriesRF LaurentSeriesRF::inverse() const {
  if (coeffs_.empty() || coeffs_[0].is_zero()) {
    throw DomainError("inverse of a series with vanishing leading coefficient");
  }
  int reldeg = trunc_ - lead_;
  std::vector<RationalFunction> inv(static_cast<std::size_t>(reldeg) + 1,
                                    RationalFunction{});
  RationalFunction c0inv = coeffs_[0].inverse();
  inv[0] = c0inv;
  for (int k = 1; k <= reldeg; ++k) {
    RationalFunction acc;
    for (int j = 1; j <= k; ++j) {
      acc += coeffs_[static_cast<std::size_t>(j)] *
             inv[static_cast<std::size_t>(k - j)];
    }
    inv[static_cast<std::size_t>(k)] = -(acc * c0inv);
  }
  return LaurentSeriesRF(-lead_, reldeg - lead_, std::move(inv));
}

LaurentSeriesRF LaurentSeriesRF::pow(unsigned e) const {
  if (e == 0) {
    // Neutral element on the same relative window.
    return one(std::max(0, trunc_ - (coeffs_.empty() ? trunc_ + 1 : lead_)));
  }
  LaurentSeriesRF acc = *this;
  for (unsigned i = 1; i < e; ++i) acc = acc * *this;
  return acc;
}

bool LaurentSeriesRF::operator==(const LaurentSeriesRF& o) const {
  if (trunc_ != o.trunc_) return false;
  int lo = std::min(coeffs_.empty() ? trunc_ + 1 : lead_,
                    o.coeffs_.empty() ? o.trunc_ + 1 : o.lead_);
  for (int i = lo; i <= trunc_; ++i) {
    if (!(coeff(i) == o.coeff(i))) return false;
  }
  return true;
}

}  // namespace fanohs
