#include "fanohs/hilbert.hpp"

#include <sstream>

namespace fanohs {

namespace {

std::string vec_str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

RationalPoint::RationalPoint(QVec coords) : x(std::move(coords)) {
  for (const auto& c : x) {
    if (c == 0) throw DomainError("evaluation point with zero coordinate");
  }
}

Rational monomial(const QVec& x, const IntVec& exponents) {
  Rational acc = rat(1);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    acc *= pow_rational(x[i], exponents[i]);
  }
  return acc;
}

Rational simplicial_series_eval(const SimplicialCone& cone,
                                const RationalPoint& x) {
  std::size_t n = cone.apex.size();
  if (cone.generators.size() != n) {
    throw DomainError("simplicial cone must have dim-many generators");
  }
  std::vector<QVec> cols(n, QVec(n, rat(0)));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      cols[i][j] = rat(cone.generators[j][i]);
    }
  }
  MatrixQ G(cols);
  if (G.determinant() == 0) {
    throw DomainError("simplicial cone generators are linearly dependent");
  }

  // Bounding box of the closed parallelepiped spanned at the apex.
  IntVec lo = cone.apex, hi = cone.apex;
  for (std::size_t mask = 1; mask < (1u << n); ++mask) {
    IntVec corner = cone.apex;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        for (std::size_t i = 0; i < n; ++i) corner[i] += cone.generators[j][i];
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], corner[i]);
      hi[i] = std::max(hi[i], corner[i]);
    }
  }

  Rational numerator = 0;
  IntVec pt = lo;
  while (true) {
    QVec rhs(n, rat(0));
    for (std::size_t i = 0; i < n; ++i) rhs[i] = rat(pt[i] - cone.apex[i]);
    QVec alpha = G.solve(rhs);
    bool inside = true;
    for (const auto& a : alpha) {
      if (a < 0 || a >= 1) {
        inside = false;
        break;
      }
    }
    if (inside) numerator += monomial(x.x, pt);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pt[i] <= hi[i]) break;
      pt[i] = lo[i];
      if (i == 0) {
        i = SIZE_MAX;
        break;
      }
    }
    if (i == SIZE_MAX) break;
  }

  Rational denom = rat(1);
  for (const auto& g : cone.generators) {
    Rational f = 1 - monomial(x.x, g);
    if (f == 0) {
      throw PoleError("pole: 1 - x^" + vec_str(g) + " vanishes");
    }
    denom *= f;
  }
  return Rational(numerator / denom);
}

Rational msy_eval(const PolarPolytope& polar, const RationalPoint& x) {
  if (x.x.size() != static_cast<std::size_t>(polar.m + 1)) {
    throw DomainError("msy_eval expects a point in Q^{m+1}");
  }
  QVec xt(x.x.begin(), x.x.end() - 1);
  Rational total = 0;
  for (std::size_t j = 0; j < polar.vertex_cones.size(); ++j) {
    const auto& cone = polar.vertex_cones[j];
    Rational lifted = 1 - monomial(x.x, cone.mu);
    if (lifted == 0) {
      throw PoleError("pole at vertex " + std::to_string(j) + ": 1 - x^" +
                      vec_str(cone.mu) + " vanishes");
    }
    Rational term = Rational(1 / lifted);
    for (const auto& e : cone.edges) {
      Rational f = 1 - monomial(xt, e);
      if (f == 0) {
        throw PoleError("pole at vertex " + std::to_string(j) + ": 1 - x~^" +
                        vec_str(e) + " vanishes");
      }
      term /= f;
    }
    total += term;
  }
  return total;
}

bool brion_check(const PolarPolytope& polar, long l, const RationalPoint& xt) {
  if (l < 1) throw DomainError("brion_check needs level >= 1");
  if (xt.x.size() != static_cast<std::size_t>(polar.m)) {
    throw DomainError("brion_check expects a point in Q^m");
  }
  Rational lhs = 0;
  for (const auto& pt : lattice_points(polar, l).points) {
    lhs += monomial(xt.x, pt);
  }
  Rational rhs = 0;
  for (std::size_t j = 0; j < polar.vertex_cones.size(); ++j) {
    const auto& cone = polar.vertex_cones[j];
    IntVec lw = cone.w;
    for (auto& c : lw) c *= l;
    Rational term = monomial(xt.x, lw);
    for (const auto& e : cone.edges) {
      Rational f = 1 - monomial(xt.x, e);
      if (f == 0) {
        throw PoleError("pole at vertex " + std::to_string(j) + ": 1 - x~^" +
                        vec_str(e) + " vanishes");
      }
      term /= f;
    }
    rhs += term;
  }
  return lhs == rhs;
}

bool series_coefficient_check(const PolarPolytope& polar, long l,
                              std::uint64_t seed) {
  if (l < 0) throw DomainError("series_coefficient_check needs level >= 0");
  std::size_t count = lattice_points(polar, l).points.size();
  if (l == 0) return count == 1;
  Rng rng(seed);
  int done = 0, attempts = 0;
  while (done < 3) {
    if (++attempts > 200) {
      throw InternalConsistencyError("could not sample a pole-free point");
    }
    try {
      if (!brion_check(polar, l, RationalPoint(rng.sample_point(polar.m)))) {
        return false;
      }
    } catch (const PoleError&) {
      continue;
    }
    ++done;
  }
  // At x~ -> (1,..,1) every monomial in the certified sum is 1, so the
  // coefficient of x_{m+1}^l counts the enumerated points.
  return count > 0;
}

nlohmann::json vertex_terms_json(const PolarPolytope& polar) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& cone : polar.vertex_cones) {
    nlohmann::json t;
    t["vertex"] = cone.w;
    t["mu"] = cone.mu;
    t["edges"] = cone.edges;
    terms.push_back(std::move(t));
  }
  nlohmann::json out;
  out["dim"] = polar.m;
  out["vertex_terms"] = terms;
  return out;
}

std::string vertex_terms_latex(const PolarPolytope& polar) {
  auto monomial_tex = [](const IntVec& e, bool lifted) {
    std::ostringstream os;
    os << "\\mathbf{" << (lifted ? "x" : "\\tilde x") << "}^{(";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) os << ",";
      os << e[i];
    }
    os << ")}";
    return os.str();
  };
  std::ostringstream os;
  os << "C(\\mathbf{x},\\mathcal{C}^*) = ";
  for (std::size_t j = 0; j < polar.vertex_cones.size(); ++j) {
    const auto& cone = polar.vertex_cones[j];
    if (j) os << " + ";
    os << "\\frac{1}{1-" << monomial_tex(cone.mu, true) << "}";
    for (const auto& e : cone.edges) {
      os << "\\frac{1}{1-" << monomial_tex(e, false) << "}";
    }
  }
  return os.str();
}

}  // namespace fanohs
