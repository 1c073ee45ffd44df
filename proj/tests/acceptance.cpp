// Acceptance suite: ten integration criteria, each with its tolerance
// pinned in code (exact criteria use equality), one pass/fail line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "fanohs/catalog.hpp"
#include "fanohs/hilbert.hpp"
#include "fanohs/volmin.hpp"
#include "test_util.hpp"

using namespace fanohs;
using fanohs::testutil::random_generic_direction;
using fanohs::testutil::random_interior_point;

namespace {

struct Criterion {
  explicit Criterion(std::string label) : label_(std::move(label)) {}
  ~Criterion() {
    std::printf("[%s] %s\n", ok_ ? "PASS" : "FAIL", label_.c_str());
    std::fflush(stdout);
  }
  void expect(bool cond, const char* what) {
    CHECK_MESSAGE(cond, what);
    ok_ = ok_ && cond;
  }
  std::string label_;
  bool ok_ = true;
};

// Reference closed form of the surface volume coefficient.
Rational dp8_cm3(const Rational& a, const Rational& b) {
  return Rational(Rational(2 * (2 * b - a + 12)) /
                  Rational((b + 3) * (b - 2 * a - 3) * (b - a + 3) *
                           (b + a - 3)));
}

GradientTable gradients_at_origin(const std::string& name) {
  const CatalogEntry& e = catalog_get(name);
  return coefficient_gradients(e.polar, canonical_reeb(e.polar.m), 1);
}

}  // namespace

TEST_CASE("criterion 1: D2 gradient table, exact equality") {
  Criterion crit("criterion 1: D2 gradient table, exact equality");
  GradientTable g = gradients_at_origin("D2");
  crit.expect(g.gradients.at(-4) ==
                  QVec{rat(-11, 1024), rat(-11, 1024), rat(-21, 1024)},
              "grad C_-4 = (-11/1024, -11/1024, -21/1024)");
  crit.expect(g.gradients.at(-2) ==
                  QVec{rat(-13, 768), rat(-13, 768), rat(-9, 256)},
              "grad C_-2 = (-13/768, -13/768, -9/256)");
  crit.expect(g.gradients.at(-1) ==
                  QVec{rat(-1, 192), rat(-1, 192), rat(-1, 64)},
              "grad C_-1 = (-1/192, -1/192, -1/64)");
}

TEST_CASE("criterion 2: span ranks and bases") {
  Criterion crit("criterion 2: span ranks and bases");
  GradientTable d2 = gradients_at_origin("D2");
  crit.expect(span_report(d2, -4, -1).rank == 2, "D2 rank 2");

  GradientTable c2 = gradients_at_origin("C2");
  SpanReport rc2 = span_report(c2, -4, -1);
  crit.expect(rc2.rank == 1, "C2 rank 1");
  crit.expect(rc2.rank == 1 && primitive_integer_vector(rc2.basis[0], true) ==
                                   IntVec{1, -2, 3},
              "C2 primitive basis (1,-2,3)");

  GradientTable b2 = gradients_at_origin("B2");
  SpanReport rb2 = span_report(b2, -4, -1);
  crit.expect(rb2.rank == 1, "B2 rank 1");
  crit.expect(rb2.rank == 1 && primitive_integer_vector(rb2.basis[0], true) ==
                                   IntVec{3, 1, 1},
              "B2 primitive basis (3,1,1)");
  crit.expect(b2.gradients.at(-4) == QVec{rat(-3, 64), rat(-1, 64), rat(-1, 64)},
              "grad C_-4(B2) = (-3/64, -1/64, -1/64)");

  GradientTable prod = gradients_at_origin("CP2xCP1");
  SpanReport rp = span_report(prod, -4, -1);
  crit.expect(rp.rank == 0, "CP2xCP1 rank 0");
  bool all_zero = true;
  for (int i = -4; i <= -1; ++i) {
    for (const auto& x : prod.gradients.at(i)) {
      if (x != 0) all_zero = false;
    }
  }
  crit.expect(all_zero, "CP2xCP1 gradients exactly zero for i in -4..-1");
}

TEST_CASE("criterion 3: rank bound over all threefold entries") {
  Criterion crit("criterion 3: rank bound over all threefold entries");
  for (const auto& name : catalog_list()) {
    const CatalogEntry& e = catalog_get(name);
    if (e.polar.m != 3) continue;
    GradientTable g = coefficient_gradients(e.polar, canonical_reeb(3), 1);
    crit.expect(span_report(g, -4, -1).rank <= 2,
                (name + ": gradient span rank <= 2").c_str());
  }
}

TEST_CASE("criterion 4: localization from the recorded fixed-point data") {
  Criterion crit("criterion 4: localization from the recorded fixed-point data");
  auto d2 = catalog_get("D2").user_fixed_points();
  crit.expect(d2.has_value(), "D2 weight data present");
  if (d2) {
    crit.expect(c1_top_integral(*d2).coeffs == QVec{rat(-22), rat(11), rat(21)},
                "D2 c1_top = -22a + 11b + 21g");
    crit.expect(c1sq_c2_integral(*d2).coeffs == QVec{rat(-4), rat(2), rat(6)},
                "D2 c1sq_c2 = 2(-2a + b + 3g)");
  }
  auto c2 = catalog_get("C2").user_fixed_points();
  crit.expect(c2.has_value(), "C2 weight data present");
  if (c2) {
    LinearForm top = c1_top_integral(*c2);
    LinearForm sec = c1sq_c2_integral(*c2);
    crit.expect(top.coeffs == QVec{rat(64), rat(-32), rat(-48)},
                "C2 c1_top = -16(-4a + 2b + 3g)");
    bool quadruple = true;
    for (std::size_t i = 0; i < 3; ++i) {
      if (top.coeffs[i] != Rational(4 * sec.coeffs[i])) quadruple = false;
    }
    crit.expect(quadruple, "C2 c1_top = 4 * c1sq_c2");
  }
}

TEST_CASE("criterion 5: derived localization span equals the gradient span") {
  Criterion crit("criterion 5: derived localization span equals the gradient span");
  const int expected_rank[] = {2, 1, 0};
  const char* names[] = {"D2", "C2", "CP2xCP1"};
  for (int k = 0; k < 3; ++k) {
    const CatalogEntry& e = catalog_get(names[k]);
    LocalizationResult loc = localize(derived_fixed_points(e.polar));
    GradientTable g = coefficient_gradients(e.polar, canonical_reeb(3), 1);
    SpanReport span = span_report(g, -4, -1);
    crit.expect(span_compare(loc, span),
                (std::string(names[k]) + ": row spaces equal").c_str());
    crit.expect(span.rank == expected_rank[k],
                (std::string(names[k]) + ": expected rank").c_str());
  }
}

TEST_CASE("criterion 6: surface closed form and gradient at the origin") {
  Criterion crit("criterion 6: surface closed form and gradient at the origin");
  const CatalogEntry& e = catalog_get("dP8");
  Rng rng(20090401);
  for (int k = 0; k < 5; ++k) {
    QVec b = random_interior_point(e.polar, rng);
    CoefficientTable t = coefficient_values(e.polar, ReebVector{b}, 0);
    crit.expect(t.values.at(-3) == dp8_cm3(b[0], b[1]),
                "C_-3 equals the reference closed form");
    crit.expect(t.values.at(-2) == Rational(rat(3, 2) * t.values.at(-3)),
                "C_-2 = (3/2) C_-3");
  }
  GradientTable g = coefficient_gradients(e.polar, canonical_reeb(2), 0);
  // Expected value on record: (-34/81, 4/81).  It is inconsistent with the
  // closed form asserted above, whose partial derivatives at the origin are
  // (-2/81, 4/81) — the exact computation agrees with the closed form, so
  // this clause fails and documents the discrepancy.
  crit.expect(g.gradients.at(-3) == QVec{rat(-34, 81), rat(4, 81)},
              "grad C_-3(xi0) = (-34/81, 4/81) on record; computed (-2/81, 4/81)");
}

TEST_CASE("criterion 7: volume-minimizing Reeb vector of the surface") {
  Criterion crit("criterion 7: volume-minimizing Reeb vector of the surface");
  const CatalogEntry& e = catalog_get("dP8");
  VolMinResult res = minimize_volume(e.polar, {});
  crit.expect(res.converged, "optimizer converged");
  double b0 = std::sqrt(13.0) - 4.0;
  crit.expect(std::abs(res.minimizer[0]) <= 1e-8, "a0 = 0 within 1e-8");
  crit.expect(std::abs(res.minimizer[1] - b0) <= 1e-8,
              "b0 = sqrt(13) - 4 within 1e-8");
  PostReport rep = post_minimization_report(e.polar, res.minimizer, 1);
  double r13 = std::sqrt(13.0);
  double da = 4 * (137 * r13 - 491) /
              (std::pow(r13 - 7, 4) * std::pow(r13 - 1, 3));
  double db = 32 * (157 * r13 - 568) /
              (std::pow(r13 - 7, 4) * std::pow(r13 - 1, 4));
  crit.expect(std::abs(rep.gradients.at(-1)[0] - da) <= 1e-9,
              "dC_-1/da matches the reference surd within 1e-9");
  crit.expect(std::abs(rep.gradients.at(-1)[1] - db) <= 1e-9,
              "dC_-1/db matches the reference surd within 1e-9");
}

TEST_CASE("criterion 8: Brion identity with zero failures") {
  Criterion crit("criterion 8: Brion identity with zero failures");
  for (const auto& name : catalog_list()) {
    const PolarPolytope& polar = catalog_get(name).polar;
    Rng rng(8);
    for (long l = 1; l <= 3; ++l) {
      int done = 0, attempts = 0;
      while (done < 5 && attempts < 500) {
        ++attempts;
        bool equal;
        try {
          equal =
              brion_check(polar, l, RationalPoint(rng.sample_point(polar.m)));
        } catch (const PoleError&) {
          continue;
        }
        crit.expect(equal, (name + ": exact identity").c_str());
        ++done;
      }
      crit.expect(done == 5, "five pole-free sample points");
    }
  }
}

TEST_CASE("criterion 9: leading coefficient vs simplicial volume") {
  Criterion crit("criterion 9: leading coefficient vs simplicial volume");
  for (const auto& name : catalog_list()) {
    const CatalogEntry& e = catalog_get(name);
    int m = e.polar.m;
    Rational fact = rat(1);
    for (int k = 2; k <= m; ++k) fact *= rat(k);
    Rational predicted = Rational(fact * polytope_volume(e.polar) /
                                  pow_rational(rat(m + 1), m + 1));
    Rational lead = coefficient_values(e.polar, canonical_reeb(m), -(m + 1))
                        .values.at(-(m + 1));
    crit.expect(lead == predicted,
                (name + ": C_{-m-1} = m! vol / (m+1)^{m+1}").c_str());
  }
  Rational cp1 = coefficient_values(catalog_get("CP1").polar,
                                    canonical_reeb(1), -2)
                     .values.at(-2);
  crit.expect(cp1 == rat(1, 2), "CP1 anchor 1/2");
  Rational dp8 = coefficient_values(catalog_get("dP8").polar,
                                    canonical_reeb(2), -3)
                     .values.at(-3);
  crit.expect(dp8 == rat(8, 27), "dP8 anchor 8/27");
}

TEST_CASE("criterion 10: robustness properties") {
  Criterion crit("criterion 10: robustness properties");
  // Pole cancellation at s = 0 over entries, interior points, directions.
  for (const auto& name : catalog_list()) {
    const PolarPolytope& polar = catalog_get(name).polar;
    Rng rng(10);
    std::vector<QVec> points{QVec(static_cast<std::size_t>(polar.m), rat(0))};
    for (int k = 0; k < 5; ++k) {
      points.push_back(random_interior_point(polar, rng));
    }
    for (const auto& b : points) {
      ReebVector rv{b};
      Direction c = random_generic_direction(polar, rv, rng);
      bool clean = true;
      try {
        line_series(polar, rv, c, 1);
      } catch (const std::exception&) {
        clean = false;
      }
      crit.expect(clean, (name + ": pole cancellation at s=0").c_str());
    }
  }
  // Direction independence of values and gradients.
  {
    const PolarPolytope& polar = catalog_get("D2").polar;
    ReebVector b{{rat(1, 8), rat(-1, 8), rat(1, 4)}};
    crit.expect(coefficient_values(polar, b, 1, 7).values ==
                    coefficient_values(polar, b, 1, 999).values,
                "values are direction independent");
    crit.expect(coefficient_gradients(polar, b, 1, 7).gradients ==
                    coefficient_gradients(polar, b, 1, 999).gradients,
                "gradients are direction independent");
  }
  // Finite differences vs exact gradients with O(h^2) decay.
  for (const auto& name : {"dP8", "D2"}) {
    const PolarPolytope& polar = catalog_get(name).polar;
    Rng rng(1010);
    QVec b = random_interior_point(polar, rng);
    ReebVector rv{b};
    Direction c = random_generic_direction(polar, rv, rng);
    int i = -(polar.m + 1);
    Rational directional =
        dot(c.ctilde,
            coefficient_gradients(polar, rv, i).gradients.at(i));
    auto err = [&](const Rational& h) {
      QVec bp = b, bm = b;
      for (std::size_t k = 0; k < b.size(); ++k) {
        bp[k] += h * c.ctilde[k];
        bm[k] -= h * c.ctilde[k];
      }
      Rational fp = coefficient_values(polar, ReebVector{bp}, i).values.at(i);
      Rational fm = coefficient_values(polar, ReebVector{bm}, i).values.at(i);
      return Rational((fp - fm) / (2 * h) - directional);
    };
    Rational e1 = err(rat(1, 64));
    Rational e2 = err(rat(1, 128));
    bool decay = e2 != 0 && to_double(e1) / to_double(e2) > 3.0 &&
                 to_double(e1) / to_double(e2) < 5.0;
    crit.expect(decay,
                (std::string(name) + ": central-difference error ratio near 4")
                    .c_str());
  }
}
