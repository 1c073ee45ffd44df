#include "fanohs/volmin.hpp"

#include <cmath>
#include <sstream>

namespace fanohs {

Rational rationalize(double x, long denominator_bound) {
  if (!std::isfinite(x)) throw DomainError("cannot rationalize a non-finite value");
  if (denominator_bound < 1) throw DomainError("denominator bound must be >= 1");
  bool neg = x < 0;
  double a = neg ? -x : x;
  // Continued-fraction convergents p/q with q capped by the bound.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = a;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long ai = static_cast<long>(fl);
    if (q0 != 0 && ai != 0 && q1 > (denominator_bound - q0) / ai) break;
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > denominator_bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-18) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return rat(neg ? -p0 : p0, q0);
  Rational r = rat(neg ? -p1 : p1, q1);
  return r;
}

namespace {

QVec rationalize_point(const std::vector<double>& b, long bound) {
  QVec out;
  out.reserve(b.size());
  for (double x : b) out.push_back(rationalize(x, bound));
  return out;
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

std::pair<double, std::vector<double>> objective_and_gradient(
    const PolarPolytope& polar, const std::vector<double>& btilde,
    long denominator_bound) {
  QVec b = rationalize_point(btilde, denominator_bound);
  if (reeb_margin(polar, b) <= 0 || dual_cone_margin(polar, b) <= 0) {
    throw DomainError("query point is not strictly interior");
  }
  ReebVector bstar{b};
  int lead = -(polar.m + 1);
  CoefficientTable vals = coefficient_values(polar, bstar, lead);
  GradientTable grads = coefficient_gradients(polar, bstar, lead);
  std::vector<double> g;
  for (const auto& x : grads.gradients.at(lead)) g.push_back(to_double(x));
  return {to_double(vals.values.at(lead)), g};
}

VolMinResult minimize_volume(const PolarPolytope& polar,
                             const VolMinConfig& cfg) {
  std::size_t m = static_cast<std::size_t>(polar.m);
  std::vector<double> x = cfg.initial.empty()
                              ? std::vector<double>(m, 0.0)
                              : cfg.initial;
  if (x.size() != m) throw DomainError("initial point dimension mismatch");

  // Iterates live on the rationalization grid so the exact oracle evaluates
  // at the iterate itself, not at a hidden perturbation of it.
  auto snap = [&](std::vector<double>& pt) {
    for (auto& c : pt) c = to_double(rationalize(c, cfg.denominator_bound));
  };
  snap(x);

  auto feasible = [&](const std::vector<double>& pt) {
    QVec b = rationalize_point(pt, cfg.denominator_bound);
    return reeb_margin(polar, b) > 0 && dual_cone_margin(polar, b) > 0;
  };
  if (!feasible(x)) throw DomainError("initial point is not strictly interior");

  auto [fx, gx] = objective_and_gradient(polar, x, cfg.denominator_bound);

  // Inverse Hessian estimate.
  std::vector<std::vector<double>> H(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) H[i][i] = 1.0;

  VolMinResult res;
  int it = 0;
  for (; it < cfg.max_iter; ++it) {
    res.grad_norm = norm2(gx);
    if (res.grad_norm <= cfg.grad_tol) {
      res.converged = true;
      break;
    }
    std::vector<double> d(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) d[i] -= H[i][j] * gx[j];
    }
    double slope = 0;
    for (std::size_t i = 0; i < m; ++i) slope += d[i] * gx[i];
    if (slope >= 0) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) H[i][j] = i == j ? 1.0 : 0.0;
        d[i] = -gx[i];
      }
      slope = -res.grad_norm * res.grad_norm;
    }
    double step = 1.0;
    std::vector<double> xn(m);
    double fn = 0;
    std::vector<double> gn;
    bool accepted = false;
    for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
      for (std::size_t i = 0; i < m; ++i) xn[i] = x[i] + step * d[i];
      snap(xn);
      if (xn == x || !feasible(xn)) continue;
      auto [ft, gt] = objective_and_gradient(polar, xn, cfg.denominator_bound);
      // The oracle is exact, so once the objective decrease falls below
      // float resolution the gradient norm is still a clean tie-breaker.
      if (ft < fx || (ft == fx && norm2(gt) < res.grad_norm)) {
        fn = ft;
        gn = gt;
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      QVec bq = rationalize_point(x, cfg.denominator_bound);
      std::ostringstream os;
      os << "line search stalled at iteration " << it << " (grad norm "
         << res.grad_norm << ", margin "
         << to_double(std::min(reeb_margin(polar, bq),
                               dual_cone_margin(polar, bq)))
         << ")";
      res.diagnostics = os.str();
      break;
    }
    // BFGS update of the inverse Hessian from the gradient difference.
    std::vector<double> sk(m), yk(m);
    double sy = 0;
    for (std::size_t i = 0; i < m; ++i) {
      sk[i] = xn[i] - x[i];
      yk[i] = gn[i] - gx[i];
      sy += sk[i] * yk[i];
    }
    if (sy > 1e-18) {
      double rho = 1.0 / sy;
      std::vector<double> Hy(m, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) Hy[i] += H[i][j] * yk[j];
      }
      double yHy = 0;
      for (std::size_t i = 0; i < m; ++i) yHy += yk[i] * Hy[i];
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          H[i][j] += (1.0 + rho * yHy) * rho * sk[i] * sk[j] -
                     rho * (Hy[i] * sk[j] + sk[i] * Hy[j]);
        }
      }
    }
    x = xn;
    fx = fn;
    gx = gn;
  }
  res.minimizer = x;
  res.objective = fx;
  res.grad_norm = norm2(gx);
  res.iterations = it;
  QVec b = rationalize_point(x, cfg.denominator_bound);
  res.margin = to_double(
      std::min(reeb_margin(polar, b), dual_cone_margin(polar, b)));
  if (!res.converged && res.diagnostics.empty()) {
    std::ostringstream os;
    os << "iteration cap " << cfg.max_iter << " reached (grad norm "
       << res.grad_norm << ", margin " << res.margin << ")";
    res.diagnostics = os.str();
  }
  return res;
}

PostReport post_minimization_report(const PolarPolytope& polar,
                                    const std::vector<double>& bstar,
                                    int order, long denominator_bound) {
  QVec b = rationalize_point(bstar, denominator_bound);
  ReebVector rv{b};
  CoefficientTable vals = coefficient_values(polar, rv, order);
  GradientTable grads = coefficient_gradients(polar, rv, order);
  PostReport rep;
  for (const auto& [i, v] : vals.values) {
    rep.values_exact[i] = to_string(v);
    rep.values[i] = to_double(v);
  }
  for (const auto& [i, g] : grads.gradients) {
    std::vector<double> gd;
    bool nonzero = false;
    for (const auto& c : g) {
      gd.push_back(to_double(c));
      if (c != 0) nonzero = true;
    }
    rep.gradients[i] = std::move(gd);
    rep.gradient_nonzero[i] = nonzero;
  }
  return rep;
}

}  // namespace fanohs
