#include "fanohs/expansion.hpp"

#include <sstream>

#include "fanohs/bernoulli.hpp"

namespace fanohs {

ReebVector canonical_reeb(int m) {
  return ReebVector{QVec(static_cast<std::size_t>(m), rat(0))};
}

LaurentSeriesRF factor_series(const Rational& A, const Rational& B, int N) {
  if (A == 0 && B == 0) {
    throw DomainError("factor_series needs (A,B) != (0,0)");
  }
  if (N < -1) throw DomainError("factor_series needs N >= -1");
  UniPolynomial u = UniPolynomial::linear(A, B);
  std::vector<RationalFunction> coeffs;
  coeffs.reserve(static_cast<std::size_t>(N + 2));
  // t^{-1} coefficient: 1/(A + B s).
  coeffs.emplace_back(UniPolynomial(rat(1)), u);
  UniPolynomial upow(rat(1));
  Rational factorial = rat(1);
  for (int k = 0; k <= N; ++k) {
    if (k > 0) {
      upow = upow * u;
      factorial *= rat(k + 1);
    }
    Rational scale = Rational(bernoulli_plus(static_cast<unsigned>(k) + 1) /
                              factorial);
    coeffs.emplace_back(upow.scaled(scale));
  }
  return LaurentSeriesRF(-1, N, std::move(coeffs));
}

namespace {

void check_interior(const PolarPolytope& polar, const ReebVector& bstar) {
  if (static_cast<int>(bstar.btilde.size()) != polar.m) {
    throw DomainError("Reeb vector dimension mismatch");
  }
  if (reeb_margin(polar, bstar.btilde) <= 0) {
    throw DomainError("Reeb vector is not interior to the slice");
  }
  if (dual_cone_margin(polar, bstar.btilde) <= 0) {
    throw DomainError("Reeb vector is outside the dual cone of C*");
  }
}

Direction sample_direction(const PolarPolytope& polar, const ReebVector& bstar,
                           Rng& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Direction c;
    c.ctilde.reserve(static_cast<std::size_t>(polar.m));
    for (int i = 0; i < polar.m; ++i) {
      c.ctilde.push_back(rat(static_cast<long>(rng.uniform(-5, 5))));
    }
    if (direction_is_generic(polar, bstar, c)) return c;
  }
  throw InternalConsistencyError("could not sample a generic direction");
}

std::vector<Direction> sample_direction_frame(const PolarPolytope& polar,
                                              const ReebVector& bstar,
                                              Rng& rng) {
  std::size_t m = static_cast<std::size_t>(polar.m);
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::vector<Direction> frame;
    std::vector<QVec> rows;
    for (std::size_t k = 0; k < m; ++k) {
      frame.push_back(sample_direction(polar, bstar, rng));
      rows.push_back(frame.back().ctilde);
    }
    if (MatrixQ(rows).determinant() != 0) return frame;
  }
  throw InternalConsistencyError("could not sample a direction frame");
}

}  // namespace

bool direction_is_generic(const PolarPolytope& polar, const ReebVector& bstar,
                          const Direction& c) {
  if (static_cast<int>(c.ctilde.size()) != polar.m) return false;
  bool all_zero = true;
  for (const auto& x : c.ctilde) {
    if (x != 0) all_zero = false;
  }
  if (all_zero) return false;
  for (const auto& cone : polar.vertex_cones) {
    // The lifted factor has A = <w, b*> + (m+1) > 0 in the interior, so only
    // the horizontal edge factors can degenerate.
    for (const auto& e : cone.edges) {
      if (dot(e, bstar.btilde) == 0 && dot(e, c.ctilde) == 0) return false;
    }
  }
  return true;
}

LaurentSeriesRF line_series(const PolarPolytope& polar, const ReebVector& bstar,
                            const Direction& c, int N) {
  check_interior(polar, bstar);
  if (N < -(polar.m + 1)) {
    throw DomainError("truncation order below the leading exponent");
  }
  if (!direction_is_generic(polar, bstar, c)) {
    throw DomainError("direction is not generic for this polytope and point");
  }
  int factor_trunc = N + polar.m;
  LaurentSeriesRF total(-(polar.m + 1), N);
  for (const auto& cone : polar.vertex_cones) {
    Rational A = dot(cone.w, bstar.btilde) + rat(polar.m + 1);
    Rational B = dot(cone.w, c.ctilde);
    LaurentSeriesRF term = factor_series(A, B, factor_trunc);
    for (const auto& e : cone.edges) {
      term = term * factor_series(dot(e, bstar.btilde), dot(e, c.ctilde),
                                  factor_trunc);
    }
    total = total + term;
  }
  for (int i = total.lead_order(); i <= N; ++i) {
    if (total.coeff(i).has_pole_at(rat(0))) {
      std::ostringstream os;
      os << "pole non-cancellation at s=0 in the t^" << i << " coefficient";
      throw InternalConsistencyError(os.str());
    }
  }
  return total;
}

CoefficientTable coefficient_values(const PolarPolytope& polar,
                                    const ReebVector& bstar, int N,
                                    std::uint64_t seed) {
  Rng rng(seed);
  Direction c1 = sample_direction(polar, bstar, rng);
  Direction c2 = sample_direction(polar, bstar, rng);
  // Distinct lines through b*; a repeated draw is fine to reject cheaply.
  for (int guard = 0; c2.ctilde == c1.ctilde && guard < 100; ++guard) {
    c2 = sample_direction(polar, bstar, rng);
  }
  LaurentSeriesRF s1 = line_series(polar, bstar, c1, N);
  LaurentSeriesRF s2 = line_series(polar, bstar, c2, N);
  CoefficientTable table;
  table.m = polar.m;
  for (int i = -(polar.m + 1); i <= N; ++i) {
    Rational v1 = s1.coeff(i).value_at_zero();
    Rational v2 = s2.coeff(i).value_at_zero();
    if (v1 != v2) {
      throw InternalConsistencyError(
          "coefficient value depends on the line direction");
    }
    table.values[i] = v1;
  }
  // The subleading coefficient is tied to the leading one by the fixed
  // ratio (m+1)/2 at every slice point.
  if (N >= -polar.m &&
      table.values.at(-polar.m) !=
          Rational(rat(polar.m + 1, 2) * table.values.at(-(polar.m + 1)))) {
    throw InternalConsistencyError(
        "subleading coefficient violates the (m+1)/2 ratio");
  }
  return table;
}

GradientTable coefficient_gradients(const PolarPolytope& polar,
                                    const ReebVector& bstar, int N,
                                    std::uint64_t seed) {
  Rng rng(seed);
  std::size_t m = static_cast<std::size_t>(polar.m);

  auto run = [&](const std::vector<Direction>& frame) {
    std::vector<QVec> rows;
    for (const auto& d : frame) rows.push_back(d.ctilde);
    MatrixQ C(rows);
    std::map<int, QVec> rhs;  // i -> directional derivatives
    for (std::size_t k = 0; k < m; ++k) {
      LaurentSeriesRF s = line_series(polar, bstar, frame[k], N);
      for (int i = -(polar.m + 1); i <= N; ++i) {
        auto& v = rhs[i];
        if (v.empty()) v.assign(m, rat(0));
        v[k] = s.coeff(i).derivative_at_zero();
      }
    }
    std::map<int, QVec> grads;
    std::vector<QVec> rhs_list;
    std::vector<int> order;
    for (auto& [i, v] : rhs) {
      order.push_back(i);
      rhs_list.push_back(v);
    }
    auto sols = C.solve_many(rhs_list);
    for (std::size_t k = 0; k < order.size(); ++k) grads[order[k]] = sols[k];
    return grads;
  };

  auto frame1 = sample_direction_frame(polar, bstar, rng);
  auto frame2 = sample_direction_frame(polar, bstar, rng);
  auto g1 = run(frame1);
  auto g2 = run(frame2);
  if (g1 != g2) {
    throw InternalConsistencyError(
        "gradient depends on the direction frame");
  }
  GradientTable table;
  table.m = polar.m;
  table.gradients = std::move(g1);
  return table;
}

SpanReport span_report(const GradientTable& g, int i_lo, int i_hi) {
  std::vector<QVec> rows;
  std::vector<int> indices;
  for (const auto& [i, grad] : g.gradients) {
    if (i < i_lo || i > i_hi) continue;
    rows.push_back(grad);
    indices.push_back(i);
  }
  SpanReport report;
  if (rows.empty()) return report;
  auto rb = MatrixQ(rows).rank_basis();
  report.rank = rb.rank;
  report.basis = rb.basis;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto coeffs = express_in_rowspace(report.basis, rows[k]);
    if (!coeffs) {
      throw InternalConsistencyError("gradient escapes its own span basis");
    }
    report.membership[indices[k]] = *coeffs;
  }
  return report;
}

std::optional<int> gradient_series_mismatch(const PolarPolytope& polar,
                                            const LaurentSeriesRF& q,
                                            const QVec& p, int i_lo, int i_hi,
                                            std::uint64_t seed) {
  if (i_hi > q.trunc_order()) {
    throw DomainError("requested range exceeds the series truncation");
  }
  GradientTable g =
      coefficient_gradients(polar, canonical_reeb(polar.m), i_hi, seed);
  for (int i = i_lo; i <= i_hi; ++i) {
    Rational f = q.coeff(i).value_at_zero();
    const QVec& grad = g.gradients.at(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (Rational(f * p[k]) != grad[k]) return i;
    }
  }
  return std::nullopt;
}

}  // namespace fanohs
