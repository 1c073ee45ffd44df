#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "fanohs/catalog.hpp"
#include "fanohs/volmin.hpp"
#include "test_util.hpp"

using namespace fanohs;

TEST_CASE("rationalization by continued fractions") {
  CHECK(rationalize(0.5, 1000000) == rat(1, 2));
  CHECK(rationalize(-0.394448724536, 1000000).get_den() <= 1000000);
  CHECK(std::abs(to_double(rationalize(-0.394448724536, 1000000)) +
                 0.394448724536) < 1e-11);
  CHECK(rationalize(3.0, 10) == rat(3));
  CHECK(rationalize(1e-9, 1000000) == 0);
  CHECK(rationalize(2.0 / 3.0, 10) == rat(2, 3));
}

TEST_CASE("oracle exactness at rational query points") {
  const PolarPolytope& polar = catalog_get("dP8").polar;
  auto [f, g] = objective_and_gradient(polar, {0.25, -0.125});
  Rational exact = coefficient_values(polar,
                                      ReebVector{{rat(1, 4), rat(-1, 8)}}, -3)
                       .values.at(-3);
  CHECK(f == to_double(exact));
  CHECK(g.size() == 2);
}

TEST_CASE("gradient at the origin matches the closed form") {
  // Partial derivatives of 2(2b-a+12)/((b+3)(b-2a-3)(b-a+3)(b+a-3)) at
  // (0,0) are (-2/81, 4/81).
  auto [f, g] = objective_and_gradient(catalog_get("dP8").polar, {0.0, 0.0});
  CHECK(f == doctest::Approx(8.0 / 27.0).epsilon(1e-15));
  CHECK(g[0] == doctest::Approx(-2.0 / 81.0).epsilon(1e-15));
  CHECK(g[1] == doctest::Approx(4.0 / 81.0).epsilon(1e-15));
}

TEST_CASE("symmetric entries have vanishing gradient at the origin") {
  for (const auto& name : {"CP1^3", "CP2xCP1", "CP3", "CP1"}) {
    const PolarPolytope& polar = catalog_get(name).polar;
    auto [f, g] = objective_and_gradient(
        polar, std::vector<double>(static_cast<std::size_t>(polar.m), 0.0));
    CHECK(f > 0);
    for (double x : g) CHECK(x == 0.0);
  }
}

TEST_CASE("infeasible query points raise domain errors") {
  CHECK_THROWS_AS(
      objective_and_gradient(catalog_get("dP8").polar, {0.0, -3.0}),
      DomainError);
  VolMinConfig cfg;
  cfg.initial = {9.0, 9.0};
  CHECK_THROWS_AS(minimize_volume(catalog_get("dP8").polar, cfg), DomainError);
}

TEST_CASE("volume minimization reaches the irrational critical point") {
  VolMinResult res = minimize_volume(catalog_get("dP8").polar, {});
  REQUIRE(res.converged);
  double b0 = std::sqrt(13.0) - 4.0;
  CHECK(std::abs(res.minimizer[0] - 0.0) <= 1e-8);
  CHECK(std::abs(res.minimizer[1] - b0) <= 1e-8);
  CHECK(res.grad_norm <= 1e-10);
  CHECK(res.margin > 0);
}

TEST_CASE("symmetric entries minimize at the origin") {
  for (const auto& name : {"CP1^3", "CP2xCP1"}) {
    VolMinResult res = minimize_volume(catalog_get(name).polar, {});
    REQUIRE(res.converged);
    for (double x : res.minimizer) CHECK(std::abs(x) <= 1e-10);
    CHECK(res.iterations == 0);
  }
}

TEST_CASE("restarts from distinct seeds agree") {
  const PolarPolytope& polar = catalog_get("dP8").polar;
  std::vector<std::vector<double>> seeds{
      {0.0, 0.0}, {0.5, 0.25}, {-0.375, -0.5}};
  std::vector<std::vector<double>> results;
  for (const auto& s : seeds) {
    VolMinConfig cfg;
    cfg.initial = s;
    VolMinResult res = minimize_volume(polar, cfg);
    REQUIRE(res.converged);
    results.push_back(res.minimizer);
  }
  for (std::size_t k = 1; k < results.size(); ++k) {
    for (std::size_t i = 0; i < results[k].size(); ++i) {
      CHECK(std::abs(results[k][i] - results[0][i]) <= 1e-7);
    }
  }
}

TEST_CASE("sampled convexity along interior segments") {
  for (const auto& name : {"dP8", "D2", "CP1^3"}) {
    const PolarPolytope& polar = catalog_get(name).polar;
    Rng rng(67);
    for (int trial = 0; trial < 4; ++trial) {
      QVec b1 = testutil::random_interior_point(polar, rng);
      QVec b2 = testutil::random_interior_point(polar, rng);
      // Five equally spaced points on the segment; exact values, float
      // second differences.
      std::vector<double> vals;
      for (int k = 0; k < 5; ++k) {
        Rational t = rat(k, 4);
        QVec b(b1.size(), rat(0));
        for (std::size_t i = 0; i < b.size(); ++i) {
          b[i] = Rational((1 - t) * b1[i] + t * b2[i]);
        }
        vals.push_back(to_double(
            coefficient_values(polar, ReebVector{b}, -(polar.m + 1))
                .values.at(-(polar.m + 1))));
      }
      double scale = std::abs(vals[0]);
      for (int k = 1; k + 1 < 5; ++k) {
        double second = vals[k - 1] - 2 * vals[k] + vals[k + 1];
        CHECK(second >= -1e-12 * scale);
      }
    }
  }
}

TEST_CASE("post-minimization report flags the nonvanishing variations") {
  const PolarPolytope& polar = catalog_get("dP8").polar;
  VolMinResult res = minimize_volume(polar, {});
  REQUIRE(res.converged);
  PostReport rep = post_minimization_report(polar, res.minimizer, 1);
  // The leading gradient vanishes to the solver tolerance ...
  double lead = 0;
  for (double x : rep.gradients.at(-3)) lead += x * x;
  CHECK(std::sqrt(lead) <= 1e-8);
  // ... while the t^{-1} variation does not: the reference surd values are
  // 4(137 sqrt(13)-491)/((sqrt(13)-7)^4 (sqrt(13)-1)^3) and
  // 32(157 sqrt(13)-568)/((sqrt(13)-7)^4 (sqrt(13)-1)^4).
  double r13 = std::sqrt(13.0);
  double da = 4 * (137 * r13 - 491) /
              (std::pow(r13 - 7, 4) * std::pow(r13 - 1, 3));
  double db = 32 * (157 * r13 - 568) /
              (std::pow(r13 - 7, 4) * std::pow(r13 - 1, 4));
  CHECK(rep.gradient_nonzero.at(-1));
  CHECK(std::abs(rep.gradients.at(-1)[0] - da) <= 1e-9);
  CHECK(std::abs(rep.gradients.at(-1)[1] - db) <= 1e-9);
}

TEST_CASE("symmetric post report is flat") {
  const PolarPolytope& polar = catalog_get("CP1^3").polar;
  PostReport rep = post_minimization_report(polar, {0.0, 0.0, 0.0}, 1);
  for (const auto& [i, nz] : rep.gradient_nonzero) {
    CHECK(!nz);
  }
}
