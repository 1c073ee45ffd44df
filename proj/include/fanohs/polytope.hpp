#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fanohs/matrix.hpp"
#include "fanohs/rational.hpp"

namespace fanohs {

// Lattice polytope whose vertices generate the rays of the fan of a smooth
// toric Fano manifold.  The vertices double as the facet normals of the
// polar polytope.
struct FanoPolytope {
  int m = 0;
  std::vector<IntVec> vertices;
  std::string name;
};

// One vertex w of the polar polytope together with the primitive generators
// of the edges emanating from it and the lifted generator mu = (w, 1).
struct VertexCone {
  IntVec w;
  std::vector<IntVec> edges;
  IntVec mu;
};

struct PolarPolytope {
  int m = 0;
  std::vector<VertexCone> vertex_cones;
  std::vector<IntVec> facet_normals;  // the Fano vertices v_j
};

struct ValidationIssue {
  std::string check;   // "origin_interior" | "primitive" | "reflexive" | "delzant"
  int index = -1;      // offending vertex/facet, -1 when global
  std::string detail;
};

struct ValidationReport {
  bool origin_interior = false;
  bool primitive = false;
  bool reflexive = false;
  bool delzant = false;
  std::vector<ValidationIssue> issues;
  bool pass() const {
    return origin_interior && primitive && reflexive && delzant;
  }
};

struct LatticePointSet {
  long level = 0;
  std::vector<IntVec> points;
};

ValidationReport validate(const FanoPolytope& p);

// Vertices, edge generators and lifts of {y : <v_j, y> >= -1}, ordered
// lexicographically.  Throws DomainError naming the failed check when the
// input is not reflexive or not Delzant.
PolarPolytope polar_dual(const FanoPolytope& p);

// Complete enumeration of Z^m intersected with l * polar, sorted lex.
LatticePointSet lattice_points(const PolarPolytope& polar, long l);

// min_j (<v_j, btilde> + (m+1)) over the fan generators; positive iff
// (btilde, m+1) lies in the interior of the slice bounded by the lifted
// facet forms lambda_j = (v_j, 1).
Rational reeb_margin(const FanoPolytope& p, const QVec& btilde);
Rational reeb_margin(const PolarPolytope& polar, const QVec& btilde);

// min_j (<w_j, btilde> + (m+1)) over the polar vertices; positive iff
// (btilde, m+1) is interior to the dual cone of the Gorenstein cone, which
// is where the index-character sum converges.
Rational dual_cone_margin(const PolarPolytope& polar, const QVec& btilde);

// Exact Euclidean volume of the polar polytope by simplicial decomposition
// (fan from the origin over triangulated facets).  Supports m <= 3.
Rational polytope_volume(const PolarPolytope& polar);

FanoPolytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polar_to_json(const PolarPolytope& polar);

// Raises DomainError if an explicit "polar" block disagrees with the
// computed dual.
void check_polar_override(const nlohmann::json& j, const PolarPolytope& polar);

}  // namespace fanohs
