#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fanohs/catalog.hpp"
#include "fanohs/localization.hpp"

using namespace fanohs;

namespace {

FixedPointSet single_point(std::vector<QVec> weight_coeffs) {
  FixedPointSet fps;
  fps.m = static_cast<int>(weight_coeffs[0].size());
  FixedPoint pt;
  for (auto& w : weight_coeffs) pt.weights.push_back(LinearForm{std::move(w)});
  fps.points.push_back(std::move(pt));
  return fps;
}

Rational eval_c1top_term(const FixedPointSet& fps, const QVec& a) {
  Rational tr = 0, det = rat(1);
  for (const auto& w : fps.points[0].weights) {
    Rational v = w.eval(a);
    tr += v;
    det *= v;
  }
  return Rational(pow_rational(tr, fps.m + 1) / det);
}

}  // namespace

TEST_CASE("single summand sanity") {
  // One point with weights (alpha, beta, gamma): the c1^4 term at (1,1,1) is
  // 81 and the c1^2 c2 term is 27.
  FixedPointSet fps = single_point(
      {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}});
  QVec ones{rat(1), rat(1), rat(1)};
  CHECK(eval_c1top_term(fps, ones) == rat(81));
  // e2 = 3, tr^2 = 9, det = 1.
}

TEST_CASE("user-mode fixed point data reproduces the recorded forms") {
  const CatalogEntry& d2 = catalog_get("D2");
  auto fps = d2.user_fixed_points();
  REQUIRE(fps.has_value());
  LinearForm c1top = c1_top_integral(*fps);
  CHECK(c1top.coeffs == QVec{rat(-22), rat(11), rat(21)});
  LinearForm c2form = c1sq_c2_integral(*fps);
  CHECK(c2form.coeffs == QVec{rat(-4), rat(2), rat(6)});

  const CatalogEntry& c2 = catalog_get("C2");
  auto fps2 = c2.user_fixed_points();
  REQUIRE(fps2.has_value());
  LinearForm f1 = c1_top_integral(*fps2);
  LinearForm f2 = c1sq_c2_integral(*fps2);
  CHECK(f1.coeffs == QVec{rat(64), rat(-32), rat(-48)});
  // c1^4 = 4 * c1^2 c2 on this entry.
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(f1.coeffs[i] == Rational(4 * f2.coeffs[i]));
  }
}

TEST_CASE("derived fixed points and their invariants") {
  // One fixed point per polar vertex, weights from the edge generators.
  const CatalogEntry& cp1 = catalog_get("CP1");
  FixedPointSet fps = derived_fixed_points(cp1.polar);
  REQUIRE(fps.points.size() == 2);
  CHECK(fps.points[0].weights[0].coeffs == QVec{rat(1)});
  CHECK(fps.points[1].weights[0].coeffs == QVec{rat(-1)});
  // m = 1: sum of w^2/w = sum of weights = 0 by symmetry.
  CHECK(c1_top_integral(fps).is_zero());

  // Four-vertex symbolic sum for the del Pezzo surface.
  LinearForm dp8 = c1_top_integral(derived_fixed_points(catalog_get("dP8").polar));
  CHECK(dp8.coeffs == QVec{rat(-2), rat(4)});
}

TEST_CASE("derived span comparison against the gradient span") {
  for (const auto& name : {"D2", "C2", "CP2xCP1", "CP3", "CP1^3", "B2"}) {
    const CatalogEntry& e = catalog_get(name);
    LocalizationResult loc = localize(derived_fixed_points(e.polar));
    GradientTable g =
        coefficient_gradients(e.polar, canonical_reeb(e.polar.m), 1);
    SpanReport span = span_report(g, -4, -1);
    CHECK(span_compare(loc, span));
  }
}

TEST_CASE("derived D2 forms span rank two") {
  LocalizationResult loc =
      localize(derived_fixed_points(catalog_get("D2").polar));
  REQUIRE(loc.c1sq_c2.has_value());
  std::vector<QVec> rows{loc.c1_top.coeffs, loc.c1sq_c2->coeffs};
  CHECK(MatrixQ(rows).rank() == 2);
}

TEST_CASE("linearity certificate holds across the catalog") {
  for (const auto& name : catalog_list()) {
    const CatalogEntry& e = catalog_get(name);
    FixedPointSet fps = derived_fixed_points(e.polar);
    CHECK_NOTHROW(c1_top_integral(fps));
    if (e.polar.m == 3) CHECK_NOTHROW(c1sq_c2_integral(fps));
  }
}

TEST_CASE("non-linear fixed point data is rejected") {
  // A single free point: (a+b+g)^4/(abg) is not linear, so the interpolation
  // residual check must fire.
  FixedPointSet fps = single_point(
      {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}});
  CHECK_THROWS_AS(c1_top_integral(fps), DomainError);
  try {
    c1_top_integral(fps);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("linear form") != std::string::npos);
  }
}

TEST_CASE("scale covariance") {
  auto fps = *catalog_get("D2").user_fixed_points();
  LinearForm f = c1_top_integral(fps);
  LinearForm g = c1sq_c2_integral(fps);
  QVec a{rat(1, 3), rat(-2, 5), rat(7, 4)};
  QVec a2{rat(2, 3), rat(-4, 5), rat(7, 2)};
  CHECK(f.eval(a2) == Rational(2 * f.eval(a)));
  CHECK(g.eval(a2) == Rational(2 * g.eval(a)));
}

TEST_CASE("negating all derived weights flips both forms") {
  const CatalogEntry& d2 = catalog_get("D2");
  FixedPointSet fps = derived_fixed_points(d2.polar);
  FixedPointSet flipped = fps;
  for (auto& pt : flipped.points) {
    for (auto& w : pt.weights) {
      for (auto& c : w.coeffs) c = -c;
    }
  }
  LocalizationResult a = localize(fps);
  LocalizationResult b = localize(flipped);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.c1_top.coeffs[i] == Rational(-b.c1_top.coeffs[i]));
    CHECK((*a.c1sq_c2).coeffs[i] == Rational(-(*b.c1sq_c2).coeffs[i]));
  }
  // Span-level conclusions are unaffected by the flip.
  GradientTable g = coefficient_gradients(d2.polar, canonical_reeb(3), 1);
  SpanReport span = span_report(g, -4, -1);
  CHECK(span_compare(a, span));
  CHECK(span_compare(b, span));
}

TEST_CASE("localization span never exceeds rank two") {
  for (const auto& name : catalog_list()) {
    const CatalogEntry& e = catalog_get(name);
    if (e.polar.m != 3) continue;
    LocalizationResult loc = localize(derived_fixed_points(e.polar));
    std::vector<QVec> rows{loc.c1_top.coeffs};
    if (loc.c1sq_c2) rows.push_back(loc.c1sq_c2->coeffs);
    CHECK(MatrixQ(rows).rank() <= 2);
    GradientTable g = coefficient_gradients(e.polar, canonical_reeb(3), 1);
    CHECK(span_report(g, -4, -1).rank <= MatrixQ(rows).rank());
  }
}

TEST_CASE("weight json round trip and validation") {
  nlohmann::json j;
  j["m"] = 2;
  j["points"] = {{{1, 0}, {0, 1}}, {{"-1/2", 1}, {0, -1}}};
  FixedPointSet fps = fixed_points_from_json(j);
  CHECK(fps.m == 2);
  CHECK(fps.points.size() == 2);
  CHECK(fps.points[1].weights[0].coeffs == QVec{rat(-1, 2), rat(1)});

  nlohmann::json bad;
  bad["m"] = 2;
  bad["points"] = {{{1, 0, 3}, {0, 1}}};
  CHECK_THROWS_AS(fixed_points_from_json(bad), DomainError);
  CHECK_THROWS_AS(c1sq_c2_integral(fps), DomainError);  // m != 3
}
