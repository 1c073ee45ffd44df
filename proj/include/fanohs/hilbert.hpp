#pragma once

#include <string>

#include "fanohs/polytope.hpp"
#include "fanohs/rng.hpp"

namespace fanohs {

// Rational simplicial cone: apex + nonnegative span of linearly independent
// integer generators.  For series evaluation the generators must form a
// square nonsingular system so the half-open parallelepiped is enumerable.
struct SimplicialCone {
  IntVec apex;
  std::vector<IntVec> generators;
};

// Evaluation point with all coordinates nonzero (monomials may carry
// negative exponents).
struct RationalPoint {
  explicit RationalPoint(QVec coords);
  QVec x;
};

Rational monomial(const QVec& x, const IntVec& exponents);

// sigma_Pi(x) / prod_i (1 - x^{v_i}) with sigma_Pi the lattice-point sum of
// the half-open parallelepiped at the apex.
Rational simplicial_series_eval(const SimplicialCone& cone,
                                const RationalPoint& x);

// Vertex-sum form of the index character:
//   sum_j 1/(1 - x^{mu_j}) * prod_b 1/(1 - xtilde^{e_{j,b}})
// evaluated at x in Q^{m+1}.  Throws PoleError when a factor vanishes.
Rational msy_eval(const PolarPolytope& polar, const RationalPoint& x);

// Exact identity between the brute-force lattice sum over l*polar and the
// sum of vertex-cone series at xtilde in Q^m.
bool brion_check(const PolarPolytope& polar, long l, const RationalPoint& xt);

// Confirms the coefficient-of-x_{m+1}^l reading of the vertex sum: the
// identity holds at seeded generic points and the direct enumeration gives
// the section count (the x -> (1,..,1) specialization).
bool series_coefficient_check(const PolarPolytope& polar, long l,
                              std::uint64_t seed = 20090401);

nlohmann::json vertex_terms_json(const PolarPolytope& polar);
std::string vertex_terms_latex(const PolarPolytope& polar);

}  // namespace fanohs
