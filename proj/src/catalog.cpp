#include "fanohs/catalog.hpp"

#include <algorithm>
#include <map>

#include "fanohs/catalog_data.hpp"

namespace fanohs {

namespace {

QVec parse_qvec(const nlohmann::json& arr) {
  QVec out;
  for (const auto& x : arr) {
    if (x.is_string()) out.push_back(parse_rational(x.get<std::string>()));
    else out.push_back(rat(x.get<long>()));
  }
  return out;
}

std::map<std::string, CatalogEntry> load_all() {
  std::map<std::string, CatalogEntry> entries;
  for (const auto& file : embedded_data_files()) {
    nlohmann::json j = nlohmann::json::parse(file.text);
    if (!j.contains("vertices")) continue;  // weight files etc.
    CatalogEntry e;
    e.raw = j;
    e.polytope = polytope_from_json(j);
    e.name = e.polytope.name.empty() ? file.name : e.polytope.name;
    e.polytope.name = e.name;
    e.dim_w = j.value("dim_W", -1);
    ValidationReport rep = validate(e.polytope);
    if (!rep.pass()) {
      throw InternalConsistencyError("catalog entry '" + e.name +
                                     "' fails validation");
    }
    e.polar = polar_dual(e.polytope);
    check_polar_override(j, e.polar);
    entries.emplace(e.name, std::move(e));
  }
  return entries;
}

const std::map<std::string, CatalogEntry>& entries() {
  static const std::map<std::string, CatalogEntry> all = load_all();
  return all;
}

}  // namespace

std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& [name, _] : entries()) names.push_back(name);
  return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
  auto it = entries().find(name);
  if (it == entries().end()) {
    std::string known;
    for (const auto& n : catalog_list()) known += " " + n;
    throw DomainError("unknown catalog entry '" + name + "'; available:" + known);
  }
  return it->second;
}

bool CatalogEntry::has_expected(const std::string& key) const {
  return raw.contains("expected") && raw.at("expected").contains(key) &&
         !raw.at("expected").at(key).is_null();
}

Rational CatalogEntry::expected_leading_coefficient() const {
  return parse_rational(raw.at("expected")
                            .at("leading_coefficient")
                            .at("value")
                            .get<std::string>());
}

std::map<int, QVec> CatalogEntry::expected_gradients() const {
  std::map<int, QVec> out;
  for (const auto& [key, arr] :
       raw.at("expected").at("gradients").at("table").items()) {
    out[std::stoi(key)] = parse_qvec(arr);
  }
  return out;
}

int CatalogEntry::expected_gradient_rank() const {
  return raw.at("expected").at("gradient_rank").at("value").get<int>();
}

std::optional<IntVec> CatalogEntry::expected_basis_line() const {
  if (!has_expected("gradient_basis_line")) return std::nullopt;
  IntVec v;
  for (const auto& x :
       raw.at("expected").at("gradient_basis_line").at("value")) {
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

std::optional<std::vector<double>> CatalogEntry::expected_minimizer() const {
  if (!has_expected("minimizer")) return std::nullopt;
  std::vector<double> v;
  for (const auto& x : raw.at("expected").at("minimizer").at("value")) {
    v.push_back(x.get<double>());
  }
  return v;
}

std::optional<FixedPointSet> CatalogEntry::user_fixed_points() const {
  if (!has_expected("localization_user")) return std::nullopt;
  return fixed_points_from_json(
      raw.at("expected").at("localization_user").at("fixed_points"));
}

std::optional<LinearForm> CatalogEntry::expected_c1_top() const {
  if (!has_expected("localization_user")) return std::nullopt;
  return LinearForm{
      parse_qvec(raw.at("expected").at("localization_user").at("c1_top"))};
}

std::optional<LinearForm> CatalogEntry::expected_c1sq_c2() const {
  if (!has_expected("localization_user")) return std::nullopt;
  return LinearForm{
      parse_qvec(raw.at("expected").at("localization_user").at("c1sq_c2"))};
}

}  // namespace fanohs
