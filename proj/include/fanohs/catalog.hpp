#pragma once

#include <optional>
#include <string>

#include "fanohs/localization.hpp"
#include "fanohs/polytope.hpp"

namespace fanohs {

// Built-in polytope with its golden expectations.  Entries are validated at
// load: the polytope passes all checks and any supplied polar block matches
// the computed dual.
struct CatalogEntry {
  std::string name;
  FanoPolytope polytope;
  PolarPolytope polar;
  int dim_w = -1;
  nlohmann::json raw;  // full parsed entry, including the "expected" block

  bool has_expected(const std::string& key) const;
  // Typed accessors for the expected block; throw when absent.
  Rational expected_leading_coefficient() const;
  std::map<int, QVec> expected_gradients() const;
  int expected_gradient_rank() const;
  std::optional<IntVec> expected_basis_line() const;
  std::optional<std::vector<double>> expected_minimizer() const;
  std::optional<FixedPointSet> user_fixed_points() const;
  std::optional<LinearForm> expected_c1_top() const;
  std::optional<LinearForm> expected_c1sq_c2() const;
};

std::vector<std::string> catalog_list();
const CatalogEntry& catalog_get(const std::string& name);

}  // namespace fanohs
