#include "fanohs/polytope.hpp"

#include <algorithm>
#include <functional>
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

// Calls fn for every k-subset of {0..n-1}.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    fn(idx);
    return;
  }
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + n - k) break;
      if (i == 0) return;
    }
    ++idx[i];
    for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd_int(g, x);
  return g == 1;
}

// The origin is interior to conv(vertices) iff the recession cone
// {y : <v_j, y> >= 0 for all j} is trivial.  A nontrivial recession cone
// either contains a line (rank deficiency) or has an extreme ray cut out by
// m-1 of the inequalities.
bool origin_interior(const FanoPolytope& p, std::string* why) {
  std::size_t m = static_cast<std::size_t>(p.m);
  std::vector<QVec> rows;
  for (const auto& v : p.vertices) rows.push_back(to_qvec(v));
  if (MatrixQ(rows).rank() < p.m) {
    if (why) *why = "fan vertices do not span the ambient space";
    return false;
  }
  bool interior = true;
  for_each_subset(p.vertices.size(), m - 1, [&](const std::vector<std::size_t>& S) {
    if (!interior) return;
    std::vector<QVec> sub;
    for (auto j : S) sub.push_back(to_qvec(p.vertices[j]));
    MatrixQ A(m - 1 == 0 ? std::vector<QVec>{QVec(m, rat(0))}
                         : std::move(sub));
    auto kernel = A.kernel_basis();
    for (const auto& y : kernel) {
      for (int sign = 0; sign < 2; ++sign) {
        bool all_nonneg = true;
        for (const auto& v : p.vertices) {
          Rational d = dot(v, y);
          if ((sign == 0 ? d : Rational(-d)) < 0) {
            all_nonneg = false;
            break;
          }
        }
        if (all_nonneg) {
          if (why) *why = "all fan vertices lie in a closed half-space";
          interior = false;
          return;
        }
      }
    }
  });
  return interior;
}

struct PolarRaw {
  std::vector<QVec> vertices;       // rational vertices of the polar
  std::vector<std::vector<std::size_t>> tight;  // facet indices tight at each
};

PolarRaw polar_vertices_raw(const FanoPolytope& p) {
  std::size_t m = static_cast<std::size_t>(p.m);
  PolarRaw out;
  for_each_subset(p.vertices.size(), m, [&](const std::vector<std::size_t>& S) {
    std::vector<QVec> rows;
    for (auto j : S) rows.push_back(to_qvec(p.vertices[j]));
    MatrixQ A(std::move(rows));
    if (A.rank() < p.m) return;
    QVec rhs(m, rat(-1));
    QVec y = A.solve(rhs);
    for (const auto& v : p.vertices) {
      if (dot(v, y) < -1) return;
    }
    if (std::find(out.vertices.begin(), out.vertices.end(), y) ==
        out.vertices.end()) {
      out.vertices.push_back(std::move(y));
    }
  });
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const QVec& a, const QVec& b) {
              for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return a[i] < b[i];
              }
              return false;
            });
  for (const auto& y : out.vertices) {
    std::vector<std::size_t> t;
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      if (dot(p.vertices[j], y) == -1) t.push_back(j);
    }
    out.tight.push_back(std::move(t));
  }
  return out;
}

// Two polar vertices are adjacent iff the facets tight at both have rank
// m-1.  For m = 1 the empty intersection has rank 0 and any two vertices of
// the segment are adjacent.
bool adjacent(const FanoPolytope& p, const std::vector<std::size_t>& ta,
              const std::vector<std::size_t>& tb) {
  std::vector<std::size_t> common;
  std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(),
                        std::back_inserter(common));
  if (static_cast<int>(common.size()) < p.m - 1) return false;
  if (p.m == 1) return true;
  std::vector<QVec> rows;
  for (auto j : common) rows.push_back(to_qvec(p.vertices[j]));
  return MatrixQ(rows).rank() == p.m - 1;
}

IntVec to_intvec_exact(const QVec& y, bool* ok) {
  IntVec out;
  *ok = true;
  for (const auto& c : y) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      *ok = false;
      return {};
    }
    out.push_back(c.get_num().get_si());
  }
  return out;
}

}  // namespace

ValidationReport validate(const FanoPolytope& p) {
  ValidationReport rep;
  if (p.m <= 0 || p.vertices.empty()) {
    rep.issues.push_back({"input", -1, "empty polytope"});
    return rep;
  }
  for (const auto& v : p.vertices) {
    if (static_cast<int>(v.size()) != p.m) {
      rep.issues.push_back({"input", -1, "vertex dimension mismatch"});
      return rep;
    }
  }

  rep.primitive = true;
  for (std::size_t j = 0; j < p.vertices.size(); ++j) {
    if (!is_primitive(p.vertices[j])) {
      rep.primitive = false;
      rep.issues.push_back({"primitive", static_cast<int>(j),
                            "vertex " + vec_str(p.vertices[j]) + " is not primitive"});
    }
  }

  std::string why;
  rep.origin_interior = origin_interior(p, &why);
  if (!rep.origin_interior) {
    rep.issues.push_back({"origin_interior", -1,
                          "origin is not interior to the convex hull"});
  }
  if (!rep.primitive || !rep.origin_interior) return rep;

  PolarRaw raw = polar_vertices_raw(p);
  rep.reflexive = true;
  for (std::size_t k = 0; k < raw.vertices.size(); ++k) {
    bool ok;
    to_intvec_exact(raw.vertices[k], &ok);
    if (!ok) {
      rep.reflexive = false;
      std::ostringstream os;
      os << "polar vertex " << k << " is not a lattice point: (";
      for (std::size_t i = 0; i < raw.vertices[k].size(); ++i) {
        if (i) os << ",";
        os << to_string(raw.vertices[k][i]);
      }
      os << ")";
      rep.issues.push_back({"reflexive", static_cast<int>(k), os.str()});
    }
  }
  if (!rep.reflexive) return rep;

  rep.delzant = true;
  for (std::size_t a = 0; a < raw.vertices.size(); ++a) {
    std::vector<QVec> edge_rows;
    for (std::size_t b = 0; b < raw.vertices.size(); ++b) {
      if (a == b || !adjacent(p, raw.tight[a], raw.tight[b])) continue;
      QVec d(raw.vertices[b]);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= raw.vertices[a][i];
      edge_rows.push_back(to_qvec(primitive_integer_vector(d)));
    }
    if (static_cast<int>(edge_rows.size()) != p.m) {
      rep.delzant = false;
      rep.issues.push_back({"delzant", static_cast<int>(a),
                            "polar vertex has " + std::to_string(edge_rows.size()) +
                                " edges, expected " + std::to_string(p.m)});
      continue;
    }
    Rational det = MatrixQ(edge_rows).determinant();
    if (det != 1 && det != -1) {
      rep.delzant = false;
      rep.issues.push_back({"delzant", static_cast<int>(a),
                            "edge determinant " + to_string(det) +
                                " at polar vertex " + std::to_string(a)});
    }
  }
  return rep;
}

PolarPolytope polar_dual(const FanoPolytope& p) {
  ValidationReport rep = validate(p);
  if (!rep.pass()) {
    std::string msg = "polytope validation failed:";
    for (const auto& is : rep.issues) msg += " [" + is.check + "] " + is.detail + ";";
    throw DomainError(msg);
  }
  PolarRaw raw = polar_vertices_raw(p);
  PolarPolytope polar;
  polar.m = p.m;
  polar.facet_normals = p.vertices;
  for (std::size_t a = 0; a < raw.vertices.size(); ++a) {
    bool ok;
    VertexCone cone;
    cone.w = to_intvec_exact(raw.vertices[a], &ok);
    for (std::size_t b = 0; b < raw.vertices.size(); ++b) {
      if (a == b || !adjacent(p, raw.tight[a], raw.tight[b])) continue;
      QVec d(raw.vertices[b]);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= raw.vertices[a][i];
      cone.edges.push_back(primitive_integer_vector(d));
    }
    std::sort(cone.edges.begin(), cone.edges.end());
    cone.mu = cone.w;
    cone.mu.push_back(1);
    polar.vertex_cones.push_back(std::move(cone));
  }
  return polar;
}

LatticePointSet lattice_points(const PolarPolytope& polar, long l) {
  if (l < 0) throw DomainError("lattice_points needs level >= 0");
  LatticePointSet out;
  out.level = l;
  int m = polar.m;
  IntVec lo(static_cast<std::size_t>(m), 0), hi(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    std::int64_t mn = 0, mx = 0;
    for (std::size_t k = 0; k < polar.vertex_cones.size(); ++k) {
      std::int64_t c = l * polar.vertex_cones[k].w[static_cast<std::size_t>(i)];
      if (k == 0 || c < mn) mn = c;
      if (k == 0 || c > mx) mx = c;
    }
    lo[static_cast<std::size_t>(i)] = mn;
    hi[static_cast<std::size_t>(i)] = mx;
  }
  IntVec pt = lo;
  while (true) {
    bool inside = true;
    for (const auto& v : polar.facet_normals) {
      if (dot(v, pt) < -l) {
        inside = false;
        break;
      }
    }
    if (inside) out.points.push_back(pt);
    int i = m - 1;
    while (i >= 0) {
      if (++pt[static_cast<std::size_t>(i)] <= hi[static_cast<std::size_t>(i)]) break;
      pt[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

Rational reeb_margin(const FanoPolytope& p, const QVec& btilde) {
  Rational best;
  bool first = true;
  for (const auto& v : p.vertices) {
    Rational margin = dot(v, btilde) + rat(p.m + 1);
    if (first || margin < best) best = margin;
    first = false;
  }
  return best;
}

Rational reeb_margin(const PolarPolytope& polar, const QVec& btilde) {
  FanoPolytope p;
  p.m = polar.m;
  p.vertices = polar.facet_normals;
  return reeb_margin(p, btilde);
}

Rational dual_cone_margin(const PolarPolytope& polar, const QVec& btilde) {
  Rational best;
  bool first = true;
  for (const auto& cone : polar.vertex_cones) {
    Rational margin = dot(cone.w, btilde) + rat(polar.m + 1);
    if (first || margin < best) best = margin;
    first = false;
  }
  return best;
}

namespace {

Rational det3(const QVec& a, const QVec& b, const QVec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

}  // namespace

Rational polytope_volume(const PolarPolytope& polar) {
  const auto& cones = polar.vertex_cones;
  if (polar.m == 1) {
    Rational mn(cones.front().w[0]), mx(cones.front().w[0]);
    for (const auto& c : cones) {
      Rational x(static_cast<long>(c.w[0]));
      mn = std::min(mn, x);
      mx = std::max(mx, x);
    }
    return Rational(mx - mn);
  }
  if (polar.m == 2) {
    // Fan from the origin (interior): order vertices by exact angle.
    std::vector<IntVec> vs;
    for (const auto& c : cones) vs.push_back(c.w);
    auto half = [](const IntVec& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0) ? 0 : 1; };
    std::sort(vs.begin(), vs.end(), [&](const IntVec& a, const IntVec& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      std::int64_t cross = a[0] * b[1] - a[1] * b[0];
      return cross > 0;
    });
    Rational area = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const IntVec& a = vs[i];
      const IntVec& b = vs[(i + 1) % vs.size()];
      area += rat(a[0] * b[1] - a[1] * b[0]);
    }
    return Rational(area / 2);
  }
  if (polar.m == 3) {
    // Cone the origin over each facet, fan-triangulating the facet polygon
    // around its centroid.
    Rational vol = 0;
    for (std::size_t j = 0; j < polar.facet_normals.size(); ++j) {
      const IntVec& normal = polar.facet_normals[j];
      std::vector<IntVec> face;
      for (const auto& c : cones) {
        if (dot(normal, c.w) == -1) face.push_back(c.w);
      }
      if (face.size() < 3) continue;
      QVec centroid(3, rat(0));
      for (const auto& q : face) {
        for (int i = 0; i < 3; ++i) centroid[static_cast<std::size_t>(i)] += rat(q[static_cast<std::size_t>(i)]);
      }
      for (auto& c : centroid) c /= rat(static_cast<long>(face.size()));
      QVec n = to_qvec(normal);
      // Angular order around the centroid in the facet plane: split by the
      // sign against a fixed reference direction, then by orientation.
      QVec ref = to_qvec(face[0]);
      for (int i = 0; i < 3; ++i) ref[static_cast<std::size_t>(i)] -= centroid[static_cast<std::size_t>(i)];
      std::sort(face.begin(), face.end(), [&](const IntVec& a, const IntVec& b) {
        QVec u = to_qvec(a), v = to_qvec(b);
        for (int i = 0; i < 3; ++i) {
          u[static_cast<std::size_t>(i)] -= centroid[static_cast<std::size_t>(i)];
          v[static_cast<std::size_t>(i)] -= centroid[static_cast<std::size_t>(i)];
        }
        Rational su = det3(ref, u, n), sv = det3(ref, v, n);
        Rational cu = dot(ref, u), cv = dot(ref, v);
        int hu = su > 0 || (su == 0 && cu > 0) ? 0 : 1;
        int hv = sv > 0 || (sv == 0 && cv > 0) ? 0 : 1;
        if (hu != hv) return hu < hv;
        return det3(u, v, n) > 0;
      });
      for (std::size_t i = 1; i + 1 < face.size(); ++i) {
        Rational d = det3(to_qvec(face[0]), to_qvec(face[i]), to_qvec(face[i + 1]));
        vol += abs(d);
      }
    }
    return Rational(vol / 6);
  }
  throw DomainError("polytope_volume supports dimensions 1..3");
}

FanoPolytope polytope_from_json(const nlohmann::json& j) {
  FanoPolytope p;
  if (!j.contains("dim") || !j.contains("vertices")) {
    throw DomainError("polytope json needs \"dim\" and \"vertices\"");
  }
  p.m = j.at("dim").get<int>();
  p.name = j.value("name", "");
  for (const auto& row : j.at("vertices")) {
    IntVec v;
    for (const auto& x : row) v.push_back(x.get<std::int64_t>());
    p.vertices.push_back(std::move(v));
  }
  return p;
}

nlohmann::json polar_to_json(const PolarPolytope& polar) {
  nlohmann::json out;
  out["dim"] = polar.m;
  nlohmann::json verts = nlohmann::json::array();
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json mus = nlohmann::json::array();
  for (const auto& cone : polar.vertex_cones) {
    verts.push_back(cone.w);
    edges.push_back(cone.edges);
    mus.push_back(cone.mu);
  }
  out["vertices"] = verts;
  out["edges"] = edges;
  out["mu"] = mus;
  return out;
}

void check_polar_override(const nlohmann::json& j, const PolarPolytope& polar) {
  if (!j.contains("polar")) return;
  const auto& pj = j.at("polar");
  if (pj.contains("vertices")) {
    std::vector<IntVec> given;
    for (const auto& row : pj.at("vertices")) {
      IntVec v;
      for (const auto& x : row) v.push_back(x.get<std::int64_t>());
      given.push_back(std::move(v));
    }
    std::sort(given.begin(), given.end());
    std::vector<IntVec> computed;
    for (const auto& c : polar.vertex_cones) computed.push_back(c.w);
    if (given != computed) {
      throw DomainError("supplied polar vertices disagree with the computed dual");
    }
  }
  if (pj.contains("edges")) {
    std::vector<std::vector<IntVec>> given;
    for (const auto& per_vertex : pj.at("edges")) {
      std::vector<IntVec> es;
      for (const auto& row : per_vertex) {
        IntVec v;
        for (const auto& x : row) v.push_back(x.get<std::int64_t>());
        es.push_back(std::move(v));
      }
      std::sort(es.begin(), es.end());
      given.push_back(std::move(es));
    }
    // Edge lists may arrive in any vertex order; compare as a
    // multiset of per-vertex edge sets.
    std::vector<std::vector<IntVec>> computed;
    for (const auto& c : polar.vertex_cones) computed.push_back(c.edges);
    auto sorted_given = given;
    auto sorted_computed = computed;
    std::sort(sorted_given.begin(), sorted_given.end());
    std::sort(sorted_computed.begin(), sorted_computed.end());
    if (sorted_given != sorted_computed) {
      throw DomainError("supplied polar edges disagree with the computed dual");
    }
  }
}

}  // namespace fanohs
