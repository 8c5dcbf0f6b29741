// Exact parametric polytopes.
//
// A ParamPolytope is an H-representation {x : <normal_i, x> <= offset_i(p)}
// whose offsets are affine in named parameters p. Everything geometric is
// computed on an instantiation at a rational parameter point; the parametric
// results (vertex charts, volume polynomials, hull families) are read back off
// the combinatorics found at a reference point and are valid on the open
// parameter region where that combinatorial type persists.
#pragma once

#include "pushpull/mpoly.hpp"
#include "pushpull/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pushpull {

struct AffineForm {
  Rat constant;
  RatVec coeffs;  // one per parameter

  static AffineForm zero(std::size_t nparams) { return {Rat(0), RatVec(nparams)}; }
  static AffineForm constant_form(std::size_t nparams, const Rat& c) { return {c, RatVec(nparams)}; }
  static AffineForm param(std::size_t nparams, std::size_t index, const Rat& c = Rat(1));

  Rat evaluate(const RatVec& at) const;
  /// Value of the linear part only.
  Rat linear(const RatVec& direction) const;
  bool is_zero() const;
  MPoly to_poly(const std::vector<std::string>& params) const;
  std::string to_string(const std::vector<std::string>& params) const;

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const Rat& c);
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rat& c) { return a *= c; }
  friend AffineForm operator*(const Rat& c, AffineForm a) { return a *= c; }
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// Re-expresses a form over a longer parameter list (new parameters get 0).
AffineForm extend_form(const AffineForm& f, std::size_t nparams);

struct Inequality {
  RatVec normal;
  AffineForm offset;
};

/// Instantiated H-representation.
struct HPolytope {
  std::size_t dim = 0;
  RatMat normals;
  RatVec offsets;
};

struct ParamPolytope {
  std::size_t dim = 0;
  std::vector<std::string> params;
  std::vector<Inequality> ineqs;
  RatVec reference;

  std::size_t param_index(const std::string& name) const;
  HPolytope instantiate(const RatVec& at) const;
  HPolytope at_reference() const { return instantiate(reference); }
  void validate() const;
};

// --------------------------------------------------------------------------
// Instantiated polytopes

struct Vertex {
  RatVec point;
  std::vector<std::size_t> active;  // indices of tight inequalities
};

/// All vertices by exhaustive search over dim-subsets of inequalities.
/// Throws std::domain_error if the system is empty or unbounded.
std::vector<Vertex> enumerate_vertices(const HPolytope& h);

/// True when {x : A x <= 0} contains a nonzero direction.
bool has_recession_direction(const RatMat& normals, std::size_t dim);

struct Facet {
  RatVec normal;  // primitive integer
  Rat offset;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  }
};

/// Primitive-integer rescaling of an inequality <normal, x> <= offset.
Facet normalize_facet(const RatVec& normal, const Rat& offset);

class Polytope {
 public:
  Polytope() = default;
  /// `redundant` (optional) receives the indices of inequalities that do not
  /// define facets, including duplicates of earlier ones.
  static Polytope from_h(const HPolytope& h, std::vector<std::size_t>* redundant = nullptr);
  static Polytope from_points(std::size_t ambient_dim, std::vector<RatVec> points);

  std::size_t ambient_dim() const { return ambient_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == static_cast<int>(ambient_); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  /// Irredundant facets, sorted; empty unless full-dimensional.
  const std::vector<Facet>& facets() const { return facets_; }
  /// facet_vertices()[f] lists the vertices on facet f.
  const std::vector<std::vector<std::size_t>>& facet_vertices() const { return incidence_; }
  HPolytope h_rep() const;
  bool contains(const RatVec& x) const;
  std::size_t vertex_index(const RatVec& x) const;

 private:
  void build_incidence();
  std::size_t ambient_ = 0;
  int dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<std::size_t>> incidence_;
};

struct Face {
  std::vector<std::size_t> vertices;  // sorted vertex indices
  std::vector<std::size_t> facets;    // facets containing the face
  int dim = 0;
};

struct FaceLattice {
  std::vector<Face> faces;  // ordered by dimension, then vertex lists; last is P
  std::vector<std::vector<std::size_t>> children;  // faces of dimension one less
  std::vector<long> f_vector() const;
  long euler_sum() const;  // sum_k (-1)^k f_k including P, excluding the empty face
};

FaceLattice face_lattice(const Polytope& p);

struct NormalFan {
  RatMat rays;                                 // primitive facet normals, sorted
  std::vector<std::vector<std::size_t>> cones;  // one per nonempty face
  friend bool operator==(const NormalFan&, const NormalFan&) = default;
};

NormalFan normal_fan(const Polytope& p);
std::string describe_difference(const NormalFan& a, const NormalFan& b);

/// Faces of codimension two with their tight facet sets; `simple` is false
/// when more than two facets meet there.
struct Codim2Face {
  std::vector<std::size_t> facets;
  std::vector<std::size_t> vertices;
  bool simple = true;
};
std::vector<Codim2Face> codim2_faces(const Polytope& p);

/// Pulling triangulation; each simplex is a list of dim+1 vertex indices.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& p, const FaceLattice& lattice);

struct VolumeResult {
  Rat value;
  bool degenerate = false;
};
VolumeResult volume(const Polytope& p);

Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Polytope cayley_sum(const Polytope& top, const Polytope& bottom);
Polytope scale(const Polytope& p, const Rat& factor);
Polytope translate(const Polytope& p, const RatVec& by);
/// Embeds into R^target_dim, coordinate i going to position coordinate_map[i].
Polytope embed(const Polytope& p, std::size_t target_dim, const std::vector<std::size_t>& coordinate_map);
/// Maps every vertex through x -> M x (rows of M), then takes the hull.
Polytope linear_image(const Polytope& p, const RatMat& m);
/// Intersection with {x_last = t}, as a polytope in one dimension less.
Polytope slice_last(const Polytope& p, const Rat& t);

struct Comparison {
  bool equal = false;
  std::string witness;  // separating inequality or differing vertex
};
Comparison compare(const Polytope& a, const Polytope& b);

// --------------------------------------------------------------------------
// Parametric machinery

struct ChartVertex {
  std::vector<std::size_t> active;
  RatVec point;                    // at the reference parameters
  std::vector<AffineForm> coords;  // affine in the parameters
  bool simple = true;
};

struct VertexChart {
  RatVec reference;
  std::vector<ChartVertex> vertices;  // sorted by point, matching Polytope::from_h
  std::vector<std::string> inconsistencies;
  bool consistent() const { return inconsistencies.empty(); }
};

VertexChart vertex_chart(const ParamPolytope& p, const RatVec& at);

/// Exact volume of the family on the combinatorial chamber of `at`.
/// Throws std::domain_error if the chart is inconsistent or the polytope is
/// not full-dimensional at `at`.
MPoly volume_polynomial(const ParamPolytope& p, const RatVec& at);
MPoly volume_polynomial(const ParamPolytope& p);

/// Parametric convex hull: points with affine coordinates are hulled at the
/// reference and every facet offset is read back as an affine form.
ParamPolytope family_hull(std::size_t dim, const std::vector<std::string>& params,
                          const std::vector<std::vector<AffineForm>>& points, const RatVec& reference);

/// Drops inequalities redundant at the reference point and rescales normals
/// to primitive integer vectors. `removed` receives the dropped indices.
ParamPolytope canonicalize(const ParamPolytope& p, std::vector<std::size_t>* removed = nullptr);

/// Builds an affine form from a parameter -> coefficient list; "const" is the constant.
AffineForm affine_from_terms(const std::vector<std::string>& params,
                             const std::vector<std::pair<std::string, Rat>>& terms);

std::string inequality_string(const Inequality& ineq, const std::vector<std::string>& params,
                              const std::vector<std::string>& coords);

}  // namespace pushpull
