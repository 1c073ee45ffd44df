#pragma once

#include <map>
#include <string>
#include <vector>

#include "fanohs/expansion.hpp"

namespace fanohs {

struct VolMinConfig {
  double grad_tol = 1e-10;
  int max_iter = 200;
  std::vector<double> initial;        // defaults to the origin
  long denominator_bound = 1000000;   // rationalization of oracle queries
  int report_order = 1;               // highest i in the post report
  std::uint64_t seed = kDefaultSeed;
};

struct VolMinResult {
  bool converged = false;
  std::vector<double> minimizer;
  double objective = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;
  double margin = 0.0;  // slice feasibility margin at the minimizer
  std::string diagnostics;
};

struct PostReport {
  std::map<int, std::string> values_exact;  // C_i at the rationalized point
  std::map<int, double> values;
  std::map<int, std::vector<double>> gradients;
  std::map<int, bool> gradient_nonzero;
};

// Nearest rational with denominator <= bound (continued fractions).
Rational rationalize(double x, long denominator_bound);

// Exact C_{-m-1} and its gradient at the rationalized query point, converted
// to floats.  Throws DomainError outside the feasible interior.
std::pair<double, std::vector<double>> objective_and_gradient(
    const PolarPolytope& polar, const std::vector<double>& btilde,
    long denominator_bound = 1000000);

// Quasi-Newton (BFGS on the inverse Hessian estimate) with a halving line
// search that rejects infeasible or non-decreasing steps.
VolMinResult minimize_volume(const PolarPolytope& polar,
                             const VolMinConfig& cfg = {});

PostReport post_minimization_report(const PolarPolytope& polar,
                                    const std::vector<double>& bstar,
                                    int order = 1,
                                    long denominator_bound = 1000000);

}  // namespace fanohs
