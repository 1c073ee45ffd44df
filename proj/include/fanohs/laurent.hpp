#pragma once

#include <vector>

#include "fanohs/rational_function.hpp"

namespace fanohs {

// Truncated Laurent series in t whose coefficients are rational functions in
// the line parameter s.  A series carries lead_order (exponents below it are
// exactly zero) and trunc_order (coefficients above it are unknown).
//
// Addition refuses operands with different truncation orders; multiplication
// propagates the truncation consistently: the product of series known up to
// t^{T1}, t^{T2} with lead orders a1, a2 is correct up to
// min(T1 + a2, T2 + a1).
class LaurentSeriesRF {
public:
  // Zero series on the exponent window [lead, trunc].
  LaurentSeriesRF(int lead, int trunc);
  LaurentSeriesRF(int lead, int trunc, std::vector<RationalFunction> coeffs);

  static LaurentSeriesRF one(int trunc);
  static LaurentSeriesRF constant(const RationalFunction& c, int trunc);
  // exp(t*(A + B*s)) as a power series up to t^trunc.
  static LaurentSeriesRF exp_linear(const Rational& A, const Rational& B,
                                    int trunc);

  int lead_order() const { return lead_; }
  int trunc_order() const { return trunc_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of t^i; exactly zero below lead_order, error above trunc.
  const RationalFunction& coeff(int i) const;

  LaurentSeriesRF operator+(const LaurentSeriesRF& o) const;
  LaurentSeriesRF operator-(const LaurentSeriesRF& o) const;
  LaurentSeriesRF operator*(const LaurentSeriesRF& o) const;
  LaurentSeriesRF operator-() const;
  LaurentSeriesRF scaled(const RationalFunction& c) const;
  LaurentSeriesRF shifted(int k) const;  // multiply by t^k
  LaurentSeriesRF inverse() const;
  LaurentSeriesRF pow(unsigned e) const;

  bool operator==(const LaurentSeriesRF& o) const;

private:
  void trim();
  int lead_;
  int trunc_;
  std::vector<RationalFunction> coeffs_;  // coeffs_[i] is the t^{lead_+i} term
};

}  // namespace fanohs
