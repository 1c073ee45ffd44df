#include "fanohs/localization.hpp"

namespace fanohs {

namespace {

Rational parse_rational_json(const nlohmann::json& x) {
  if (x.is_string()) return parse_rational(x.get<std::string>());
  if (x.is_number_integer()) return rat(x.get<long>());
  throw DomainError("weight entries must be integers or \"p/q\" strings");
}

// Evaluates one integrand term-by-term; throws PoleError when a weight
// vanishes at the sample so the caller can resample.
Rational eval_integrand(const FixedPointSet& fps, const QVec& a,
                        bool second_chern) {
  Rational total = 0;
  for (const auto& pt : fps.points) {
    Rational tr = 0;
    Rational det = rat(1);
    QVec ws;
    for (const auto& w : pt.weights) {
      Rational v = w.eval(a);
      if (v == 0) throw PoleError("weight vanishes at sample point");
      tr += v;
      det *= v;
      ws.push_back(v);
    }
    Rational numer;
    if (second_chern) {
      Rational e2 = 0;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        for (std::size_t j = i + 1; j < ws.size(); ++j) e2 += ws[i] * ws[j];
      }
      numer = pow_rational(tr, 2) * e2;
    } else {
      numer = pow_rational(tr, static_cast<long>(fps.m) + 1);
    }
    total += Rational(numer / det);
  }
  return total;
}

QVec sample_parameters(const FixedPointSet& fps, Rng& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    QVec a;
    for (int i = 0; i < fps.m; ++i) a.push_back(rng.small_rational());
    bool ok = true;
    for (const auto& pt : fps.points) {
      for (const auto& w : pt.weights) {
        if (w.eval(a) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return a;
  }
  throw InternalConsistencyError("could not sample weight-regular parameters");
}

LinearForm fit_linear_form(const FixedPointSet& fps, bool second_chern,
                           std::uint64_t seed) {
  if (fps.points.empty()) throw DomainError("empty fixed point set");
  for (const auto& pt : fps.points) {
    if (static_cast<int>(pt.weights.size()) != fps.m) {
      throw DomainError("each fixed point needs m weights");
    }
  }
  Rng rng(seed);
  std::size_t m = static_cast<std::size_t>(fps.m);
  // m + 2 interpolation samples with an invertible leading m x m block.
  std::vector<QVec> samples;
  std::vector<Rational> values;
  for (int attempt = 0; attempt < 500 && samples.size() < m; ++attempt) {
    QVec a = sample_parameters(fps, rng);
    std::vector<QVec> trial = samples;
    trial.push_back(a);
    if (MatrixQ(trial).rank() == static_cast<int>(trial.size())) {
      samples.push_back(a);
      values.push_back(eval_integrand(fps, a, second_chern));
    }
  }
  if (samples.size() < m) {
    throw InternalConsistencyError("could not assemble interpolation samples");
  }
  // Solve rows(samples) * coeffs = values.
  MatrixQ A(samples);
  QVec rhs(values.begin(), values.end());
  LinearForm form{A.solve(rhs)};
  // Remaining interpolation points double as exactness witnesses ...
  for (int k = 0; k < 2; ++k) {
    QVec a = sample_parameters(fps, rng);
    if (form.eval(a) != eval_integrand(fps, a, second_chern)) {
      throw DomainError(
          "fixed-point data does not define a linear form "
          "(nonzero interpolation residual)");
    }
  }
  // ... and two held-out verification points close the certificate.
  for (int k = 0; k < 2; ++k) {
    QVec a = sample_parameters(fps, rng);
    if (form.eval(a) != eval_integrand(fps, a, second_chern)) {
      throw DomainError(
          "fixed-point data does not define a linear form "
          "(verification point residual)");
    }
  }
  return form;
}

}  // namespace

LinearForm c1_top_integral(const FixedPointSet& fps, std::uint64_t seed) {
  return fit_linear_form(fps, false, seed);
}

LinearForm c1sq_c2_integral(const FixedPointSet& fps, std::uint64_t seed) {
  if (fps.m != 3) {
    throw DomainError("c1sq_c2_integral is defined for threefolds only");
  }
  return fit_linear_form(fps, true, seed);
}

LocalizationResult localize(const FixedPointSet& fps, std::uint64_t seed) {
  LocalizationResult out;
  out.c1_top = c1_top_integral(fps, seed);
  if (fps.m == 3) out.c1sq_c2 = c1sq_c2_integral(fps, seed + 1);
  return out;
}

FixedPointSet derived_fixed_points(const PolarPolytope& polar) {
  FixedPointSet fps;
  fps.m = polar.m;
  fps.source = FixedPointSource::derived;
  for (const auto& cone : polar.vertex_cones) {
    FixedPoint pt;
    for (const auto& e : cone.edges) {
      pt.weights.push_back(LinearForm{to_qvec(e)});
    }
    fps.points.push_back(std::move(pt));
  }
  return fps;
}

bool span_compare(const LocalizationResult& loc, const SpanReport& grad) {
  std::vector<QVec> loc_rows;
  if (!loc.c1_top.is_zero()) loc_rows.push_back(loc.c1_top.coeffs);
  if (loc.c1sq_c2 && !loc.c1sq_c2->is_zero()) {
    loc_rows.push_back(loc.c1sq_c2->coeffs);
  }
  return same_rowspace(loc_rows, grad.basis);
}

FixedPointSet fixed_points_from_json(const nlohmann::json& j) {
  FixedPointSet fps;
  fps.source = FixedPointSource::user;
  if (!j.contains("m") || !j.contains("points")) {
    throw DomainError("fixed point json needs \"m\" and \"points\"");
  }
  fps.m = j.at("m").get<int>();
  for (const auto& pj : j.at("points")) {
    FixedPoint pt;
    for (const auto& wj : pj) {
      LinearForm w;
      for (const auto& cj : wj) w.coeffs.push_back(parse_rational_json(cj));
      if (static_cast<int>(w.coeffs.size()) != fps.m) {
        throw DomainError("weight coefficient vector has wrong length");
      }
      pt.weights.push_back(std::move(w));
    }
    fps.points.push_back(std::move(pt));
  }
  return fps;
}

}  // namespace fanohs
