#pragma once

#include <map>
#include <optional>

#include "fanohs/laurent.hpp"
#include "fanohs/polytope.hpp"
#include "fanohs/rng.hpp"

namespace fanohs {

inline constexpr std::uint64_t kDefaultSeed = 20091231;

// Point of the Reeb slice: b = (btilde, m+1).  The last coordinate is fixed
// by the slice normalization <gamma, b> = -(m+1) with gamma = (0,..,0,-1).
struct ReebVector {
  QVec btilde;
  int m() const { return static_cast<int>(btilde.size()); }
};

// Tangent direction to the slice: c = (ctilde, 0).
struct Direction {
  QVec ctilde;
};

struct CoefficientTable {
  int m = 0;
  std::map<int, Rational> values;  // i -> C_i(b*)
};

struct GradientTable {
  int m = 0;
  std::map<int, QVec> gradients;  // i -> grad C_i(b*)
};

struct SpanReport {
  int rank = 0;
  std::vector<QVec> basis;
  // Coefficients of each gradient in the basis rows.
  std::map<int, QVec> membership;
};

ReebVector canonical_reeb(int m);

// Laurent series in t of 1/(1 - e^{-t(A+Bs)}) up to t^N: the coefficient of
// t^k is B^+_{k+1} (A+Bs)^k / (k+1)!.
LaurentSeriesRF factor_series(const Rational& A, const Rational& B, int N);

// A direction is generic for (polar, b*) when no factor that is degenerate
// at b* stays degenerate along the line b* + s c.
bool direction_is_generic(const PolarPolytope& polar, const ReebVector& bstar,
                          const Direction& c);

// Vertex-sum Laurent expansion of C(e^{-t(b*+sc)}, C*) truncated at t^N.
// Every coefficient is verified pole-free at s = 0.
LaurentSeriesRF line_series(const PolarPolytope& polar, const ReebVector& bstar,
                            const Direction& c, int N);

// C_i(b*) for i = -(m+1)..N, computed along a seeded generic line and
// cross-checked against an independent second direction.
CoefficientTable coefficient_values(const PolarPolytope& polar,
                                    const ReebVector& bstar, int N,
                                    std::uint64_t seed = kDefaultSeed);

// grad C_i(b*) recovered from m directional derivatives by an exact linear
// solve; cross-checked against an independent direction set.
GradientTable coefficient_gradients(const PolarPolytope& polar,
                                    const ReebVector& bstar, int N,
                                    std::uint64_t seed = kDefaultSeed);

SpanReport span_report(const GradientTable& g, int i_lo, int i_hi);

// Checks grad C_i == (coefficient of t^i in q) * p for i in [i_lo, i_hi].
// Returns the first differing order, or nullopt on full agreement.
std::optional<int> gradient_series_mismatch(const PolarPolytope& polar,
                                            const LaurentSeriesRF& q,
                                            const QVec& p, int i_lo, int i_hi,
                                            std::uint64_t seed = kDefaultSeed);

}  // namespace fanohs
