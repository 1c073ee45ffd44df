#pragma once

#include <optional>

#include "fanohs/expansion.hpp"
#include "fanohs/polytope.hpp"

namespace fanohs {

// Linear form in the torus parameters (alpha, beta, gamma for m = 3); the
// localization integrands are homogeneous of degree one, so no constant term
// can occur.
struct LinearForm {
  QVec coeffs;
  Rational eval(const QVec& a) const { return dot(coeffs, a); }
  bool is_zero() const {
    for (const auto& c : coeffs) {
      if (c != 0) return false;
    }
    return true;
  }
  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
};

struct FixedPoint {
  std::vector<LinearForm> weights;  // diagonal of L(X) at the point
};

enum class FixedPointSource { user, derived };

struct FixedPointSet {
  int m = 0;
  FixedPointSource source = FixedPointSource::user;
  std::vector<FixedPoint> points;
};

struct LocalizationResult {
  LinearForm c1_top;
  std::optional<LinearForm> c1sq_c2;  // m = 3 only
};

// sum_i (sum_b w_{i,b})^{m+1} / prod_b w_{i,b}, recovered as a linear form by
// exact interpolation with held-out verification points.
LinearForm c1_top_integral(const FixedPointSet& fps,
                           std::uint64_t seed = kDefaultSeed);

// sum_i (sum_b w_{i,b})^2 e_2(w_i) / prod_b w_{i,b} for threefolds.
LinearForm c1sq_c2_integral(const FixedPointSet& fps,
                            std::uint64_t seed = kDefaultSeed);

LocalizationResult localize(const FixedPointSet& fps,
                            std::uint64_t seed = kDefaultSeed);

// One fixed point per polar vertex with weights <e_{j,b}, a>.
FixedPointSet derived_fixed_points(const PolarPolytope& polar);

// Exact row-space equality between span{c1_top, c1sq_c2} and the gradient
// span basis.
bool span_compare(const LocalizationResult& loc, const SpanReport& grad);

// JSON schema: {"m": 3, "points": [[[w coeffs], ...], ...]} with rational
// entries as numbers or "p/q" strings.
FixedPointSet fixed_points_from_json(const nlohmann::json& j);

}  // namespace fanohs
