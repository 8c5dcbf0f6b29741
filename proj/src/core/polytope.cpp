#include "pushpull/polytope.hpp"

#include "pushpull/hull.hpp"
#include "pushpull/linalg.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pushpull {

// --------------------------------------------------------------------------
// AffineForm

AffineForm AffineForm::param(std::size_t nparams, std::size_t index, const Rat& c) {
  AffineForm f = zero(nparams);
  f.coeffs.at(index) = c;
  return f;
}

Rat AffineForm::evaluate(const RatVec& at) const {
  if (at.size() != coeffs.size()) throw std::invalid_argument("AffineForm::evaluate: parameter count mismatch");
  Rat s = constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) s += coeffs[i] * at[i];
  }
  return s;
}

Rat AffineForm::linear(const RatVec& direction) const { return dot(coeffs, direction); }

bool AffineForm::is_zero() const {
  return constant == 0 && std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

MPoly AffineForm::to_poly(const std::vector<std::string>& params) const {
  if (params.size() != coeffs.size()) throw std::invalid_argument("AffineForm::to_poly: parameter count mismatch");
  MPoly p = MPoly::constant(params, constant);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) p += MPoly::variable(params, i) * coeffs[i];
  }
  return p;
}

namespace {

void append_term(std::string& s, const Rat& c, const std::string& name) {
  Rat mag = abs(c);
  std::string body = name.empty() ? to_string(mag) : (mag == 1 ? name : to_string(mag) + "*" + name);
  if (s.empty()) {
    s = (c < 0 ? "-" : "") + body;
  } else {
    s += (c < 0 ? " - " : " + ") + body;
  }
}

}  // namespace

std::string AffineForm::to_string(const std::vector<std::string>& params) const {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) append_term(s, coeffs[i], params.at(i));
  }
  if (constant != 0) append_term(s, constant, "");
  return s.empty() ? "0" : s;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  if (o.coeffs.size() != coeffs.size()) throw std::invalid_argument("AffineForm: parameter count mismatch");
  constant += o.constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  if (o.coeffs.size() != coeffs.size()) throw std::invalid_argument("AffineForm: parameter count mismatch");
  constant -= o.constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

AffineForm& AffineForm::operator*=(const Rat& c) {
  constant *= c;
  for (auto& x : coeffs) x *= c;
  return *this;
}

AffineForm extend_form(const AffineForm& f, std::size_t nparams) {
  if (nparams < f.coeffs.size()) throw std::invalid_argument("extend_form: cannot shrink");
  AffineForm g = f;
  g.coeffs.resize(nparams);
  return g;
}

AffineForm affine_from_terms(const std::vector<std::string>& params,
                             const std::vector<std::pair<std::string, Rat>>& terms) {
  AffineForm f = AffineForm::zero(params.size());
  for (const auto& [name, c] : terms) {
    if (name == "const") {
      f.constant += c;
      continue;
    }
    auto it = std::find(params.begin(), params.end(), name);
    if (it == params.end()) throw std::invalid_argument("unknown parameter '" + name + "'");
    f.coeffs[static_cast<std::size_t>(it - params.begin())] += c;
  }
  return f;
}

std::string inequality_string(const Inequality& ineq, const std::vector<std::string>& params,
                              const std::vector<std::string>& coords) {
  std::string lhs;
  for (std::size_t i = 0; i < ineq.normal.size(); ++i) {
    if (ineq.normal[i] != 0) append_term(lhs, ineq.normal[i], coords.at(i));
  }
  if (lhs.empty()) lhs = "0";
  return lhs + " <= " + ineq.offset.to_string(params);
}

// --------------------------------------------------------------------------
// ParamPolytope

std::size_t ParamPolytope::param_index(const std::string& name) const {
  auto it = std::find(params.begin(), params.end(), name);
  if (it == params.end()) throw std::invalid_argument("unknown parameter '" + name + "'");
  return static_cast<std::size_t>(it - params.begin());
}

HPolytope ParamPolytope::instantiate(const RatVec& at) const {
  validate();
  if (at.size() != params.size()) throw std::invalid_argument("instantiate: parameter count mismatch");
  HPolytope h;
  h.dim = dim;
  for (const auto& q : ineqs) {
    h.normals.push_back(q.normal);
    h.offsets.push_back(q.offset.evaluate(at));
  }
  return h;
}

void ParamPolytope::validate() const {
  if (dim == 0) throw std::invalid_argument("polytope dimension must be positive");
  for (const auto& q : ineqs) {
    if (q.normal.size() != dim) throw std::invalid_argument("inequality normal has wrong length");
    if (q.offset.coeffs.size() != params.size()) throw std::invalid_argument("inequality offset has wrong parameter count");
  }
  if (!reference.empty() && reference.size() != params.size()) {
    throw std::invalid_argument("reference point has wrong parameter count");
  }
}

// --------------------------------------------------------------------------
// Vertex enumeration

namespace {

// Calls fn on every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> tight_set(const HPolytope& h, const RatVec& x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < h.normals.size(); ++i) {
    if (dot(h.normals[i], x) == h.offsets[i]) out.push_back(i);
  }
  return out;
}

// Greedy maximal independent subset of the given rows (in order).
std::vector<std::size_t> independent_rows(const RatMat& rows, const std::vector<std::size_t>& candidates, std::size_t dim) {
  std::vector<std::size_t> chosen;
  RatMat acc;
  for (auto i : candidates) {
    acc.push_back(rows[i]);
    if (rank(LinMap::from_rows(acc, dim)) == acc.size()) {
      chosen.push_back(i);
      if (chosen.size() == dim) break;
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

}  // namespace

bool has_recession_direction(const RatMat& normals, std::size_t dim) {
  if (normals.empty()) return true;
  if (rank(LinMap::from_rows(normals, dim)) < dim) return true;
  RatMat neg;
  for (const auto& a : normals) {
    RatVec r(a);
    for (auto& x : r) x = -x;
    neg.push_back(std::move(r));
  }
  return !extreme_rays(neg).empty();
}

std::vector<Vertex> enumerate_vertices(const HPolytope& h) {
  const std::size_t n = h.dim;
  const std::size_t m = h.normals.size();
  if (h.offsets.size() != m) throw std::invalid_argument("enumerate_vertices: offsets/normals mismatch");
  if (has_recession_direction(h.normals, n)) throw std::domain_error("polytope is unbounded");
  std::set<RatVec> points;
  for_each_subset(m, n, [&](const std::vector<std::size_t>& sub) {
    LinMap b(n, n);
    RatVec rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) b.at(r, c) = h.normals[sub[r]][c];
      rhs[r] = h.offsets[sub[r]];
    }
    Rref red = rref(b);
    if (red.rank() < n) return;
    auto x = solve(b, rhs);
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(h.normals[i], *x) > h.offsets[i]) return;
    }
    points.insert(std::move(*x));
  });
  if (points.empty()) throw std::domain_error("polytope is empty");
  std::vector<Vertex> out;
  for (const auto& p : points) out.push_back({p, tight_set(h, p)});
  return out;
}

Facet normalize_facet(const RatVec& normal, const Rat& offset) {
  Rat f = primitive_scale(normal);
  Facet out{normal, offset * f};
  for (auto& x : out.normal) x *= f;
  return out;
}

// --------------------------------------------------------------------------
// Polytope

namespace {

struct FullHull {
  std::vector<Facet> facets;
  std::vector<bool> is_vertex;
};

// Hull of points spanning R^n affinely.
FullHull full_hull(std::size_t n, const std::vector<RatVec>& pts) {
  RatMat rows;
  for (const auto& v : pts) {
    RatVec r(n + 1);
    r[0] = 1;
    for (std::size_t k = 0; k < n; ++k) r[k + 1] = -v[k];
    rows.push_back(std::move(r));
  }
  FullHull out;
  for (const auto& ray : extreme_rays(rows)) {
    RatVec a(ray.begin() + 1, ray.end());
    out.facets.push_back(normalize_facet(a, ray[0]));
  }
  std::sort(out.facets.begin(), out.facets.end());
  out.is_vertex.assign(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    RatMat tight;
    for (const auto& f : out.facets) {
      if (dot(f.normal, pts[i]) == f.offset) tight.push_back(f.normal);
    }
    out.is_vertex[i] = !tight.empty() && rank(LinMap::from_rows(tight, n)) == n;
  }
  return out;
}

}  // namespace

Polytope Polytope::from_h(const HPolytope& h, std::vector<std::size_t>* redundant) {
  Polytope p;
  p.ambient_ = h.dim;
  auto verts = enumerate_vertices(h);
  for (auto& v : verts) p.vertices_.push_back(v.point);
  p.dim_ = affine_dimension(p.vertices_);
  if (redundant) redundant->clear();
  if (!p.full_dimensional()) return p;
  std::set<Facet> seen;
  for (std::size_t i = 0; i < h.normals.size(); ++i) {
    std::vector<RatVec> contact;
    for (const auto& v : p.vertices_) {
      if (dot(h.normals[i], v) == h.offsets[i]) contact.push_back(v);
    }
    Facet f = normalize_facet(h.normals[i], h.offsets[i]);
    bool facet = affine_dimension(contact) == static_cast<int>(h.dim) - 1 && !seen.contains(f);
    if (facet) {
      seen.insert(f);
      p.facets_.push_back(f);
    } else if (redundant) {
      redundant->push_back(i);
    }
  }
  std::sort(p.facets_.begin(), p.facets_.end());
  p.build_incidence();
  return p;
}

Polytope Polytope::from_points(std::size_t ambient_dim, std::vector<RatVec> points) {
  if (points.empty()) throw std::invalid_argument("from_points: no points");
  for (const auto& v : points) {
    if (v.size() != ambient_dim) throw std::invalid_argument("from_points: point has wrong dimension");
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Polytope p;
  p.ambient_ = ambient_dim;
  p.dim_ = affine_dimension(points);
  if (p.dim_ == 0) {
    p.vertices_ = points;
    return p;
  }
  if (p.full_dimensional()) {
    FullHull hull = full_hull(ambient_dim, points);
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (hull.is_vertex[i]) p.vertices_.push_back(points[i]);
    }
    p.facets_ = std::move(hull.facets);
    p.build_incidence();
    return p;
  }
  // Lower-dimensional: project onto coordinates on which the affine hull is a graph.
  LinMap diffs(points.size() - 1, ambient_dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t k = 0; k < ambient_dim; ++k) diffs.at(i - 1, k) = points[i][k] - points[0][k];
  }
  auto pivots = rref(diffs).pivots;
  std::vector<RatVec> proj;
  for (const auto& v : points) {
    RatVec w;
    for (auto c : pivots) w.push_back(v[c]);
    proj.push_back(std::move(w));
  }
  FullHull hull = full_hull(pivots.size(), proj);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (hull.is_vertex[i]) p.vertices_.push_back(points[i]);
  }
  return p;
}

void Polytope::build_incidence() {
  incidence_.assign(facets_.size(), {});
  for (std::size_t f = 0; f < facets_.size(); ++f) {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (dot(facets_[f].normal, vertices_[v]) == facets_[f].offset) incidence_[f].push_back(v);
    }
  }
}

HPolytope Polytope::h_rep() const {
  HPolytope h;
  h.dim = ambient_;
  for (const auto& f : facets_) {
    h.normals.push_back(f.normal);
    h.offsets.push_back(f.offset);
  }
  return h;
}

bool Polytope::contains(const RatVec& x) const {
  if (!full_dimensional()) throw std::domain_error("contains: polytope is not full-dimensional");
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, x) <= f.offset; });
}

std::size_t Polytope::vertex_index(const RatVec& x) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end() || *it != x) throw std::out_of_range("not a vertex: " + to_string(x));
  return static_cast<std::size_t>(it - vertices_.begin());
}

// --------------------------------------------------------------------------
// Faces

FaceLattice face_lattice(const Polytope& p) {
  if (!p.full_dimensional()) throw std::domain_error("face_lattice: polytope is not full-dimensional");
  const std::size_t n = p.ambient_dim();
  const auto& inc = p.facet_vertices();
  std::vector<std::size_t> all(p.vertices().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::set<std::vector<std::size_t>> found{all};
  std::vector<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto face = std::move(queue.back());
    queue.pop_back();
    for (const auto& fv : inc) {
      std::vector<std::size_t> meet;
      std::set_intersection(face.begin(), face.end(), fv.begin(), fv.end(), std::back_inserter(meet));
      if (meet.empty() || meet.size() == face.size()) continue;
      if (found.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  FaceLattice lat;
  for (const auto& verts : found) {
    Face f;
    f.vertices = verts;
    RatMat normals;
    for (std::size_t k = 0; k < inc.size(); ++k) {
      if (std::includes(inc[k].begin(), inc[k].end(), verts.begin(), verts.end())) {
        f.facets.push_back(k);
        normals.push_back(p.facets()[k].normal);
      }
    }
    f.dim = static_cast<int>(n) - (normals.empty() ? 0 : static_cast<int>(rank(LinMap::from_rows(normals, n))));
    lat.faces.push_back(std::move(f));
  }
  std::sort(lat.faces.begin(), lat.faces.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  lat.children.assign(lat.faces.size(), {});
  for (std::size_t i = 0; i < lat.faces.size(); ++i) {
    for (std::size_t j = 0; j < lat.faces.size(); ++j) {
      if (lat.faces[j].dim + 1 != lat.faces[i].dim) continue;
      const auto& a = lat.faces[i].vertices;
      const auto& b = lat.faces[j].vertices;
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) lat.children[i].push_back(j);
    }
  }
  return lat;
}

std::vector<long> FaceLattice::f_vector() const {
  int top = faces.empty() ? -1 : faces.back().dim;
  std::vector<long> f(static_cast<std::size_t>(top + 1), 0);
  for (const auto& face : faces) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

long FaceLattice::euler_sum() const {
  long s = 0;
  auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * f[k];
  return s;
}

NormalFan normal_fan(const Polytope& p) {
  FaceLattice lat = face_lattice(p);
  NormalFan fan;
  for (const auto& f : p.facets()) fan.rays.push_back(f.normal);
  std::vector<std::pair<int, std::vector<std::size_t>>> cones;
  for (const auto& face : lat.faces) cones.emplace_back(static_cast<int>(p.ambient_dim()) - face.dim, face.facets);
  std::sort(cones.begin(), cones.end());
  for (auto& c : cones) fan.cones.push_back(std::move(c.second));
  return fan;
}

std::string describe_difference(const NormalFan& a, const NormalFan& b) {
  if (a == b) return "";
  std::ostringstream out;
  std::set<RatVec> ra(a.rays.begin(), a.rays.end()), rb(b.rays.begin(), b.rays.end());
  for (const auto& r : ra) {
    if (!rb.contains(r)) out << "ray " << to_string(r) << " only in first; ";
  }
  for (const auto& r : rb) {
    if (!ra.contains(r)) out << "ray " << to_string(r) << " only in second; ";
  }
  if (ra == rb) {
    std::set<std::vector<std::size_t>> ca(a.cones.begin(), a.cones.end()), cb(b.cones.begin(), b.cones.end());
    for (const auto& c : ca) {
      if (!cb.contains(c)) {
        out << "cone {";
        for (std::size_t k = 0; k < c.size(); ++k) out << (k ? "," : "") << to_string(a.rays[c[k]]);
        out << "} only in first; ";
        break;
      }
    }
    for (const auto& c : cb) {
      if (!ca.contains(c)) {
        out << "cone {";
        for (std::size_t k = 0; k < c.size(); ++k) out << (k ? "," : "") << to_string(b.rays[c[k]]);
        out << "} only in second; ";
        break;
      }
    }
  }
  std::string s = out.str();
  if (s.size() >= 2) s.resize(s.size() - 2);
  return s;
}

std::vector<Codim2Face> codim2_faces(const Polytope& p) {
  FaceLattice lat = face_lattice(p);
  std::vector<Codim2Face> out;
  int target = static_cast<int>(p.ambient_dim()) - 2;
  for (const auto& f : lat.faces) {
    if (f.dim != target) continue;
    out.push_back({f.facets, f.vertices, f.facets.size() == 2});
  }
  return out;
}

std::vector<std::vector<std::size_t>> triangulate(const Polytope& p, const FaceLattice& lattice) {
  (void)p;
  std::vector<std::optional<std::vector<std::vector<std::size_t>>>> memo(lattice.faces.size());
  auto rec = [&](auto&& self, std::size_t fi) -> const std::vector<std::vector<std::size_t>>& {
    if (memo[fi]) return *memo[fi];
    const Face& face = lattice.faces[fi];
    std::vector<std::vector<std::size_t>> out;
    if (face.dim == 0) {
      out.push_back({face.vertices.front()});
    } else {
      std::size_t apex = face.vertices.front();
      for (auto ci : lattice.children[fi]) {
        const auto& cv = lattice.faces[ci].vertices;
        if (std::binary_search(cv.begin(), cv.end(), apex)) continue;
        for (const auto& simplex : self(self, ci)) {
          std::vector<std::size_t> s{apex};
          s.insert(s.end(), simplex.begin(), simplex.end());
          out.push_back(std::move(s));
        }
      }
    }
    memo[fi] = std::move(out);
    return *memo[fi];
  };
  return rec(rec, lattice.faces.size() - 1);
}

namespace {

Rat factorial(std::size_t n) {
  Rat f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

Rat simplex_det(const std::vector<RatVec>& verts, const std::vector<std::size_t>& s) {
  RatMat m;
  for (std::size_t k = 1; k < s.size(); ++k) {
    RatVec row(verts[s[k]]);
    for (std::size_t c = 0; c < row.size(); ++c) row[c] -= verts[s[0]][c];
    m.push_back(std::move(row));
  }
  return determinant(std::move(m));
}

}  // namespace

VolumeResult volume(const Polytope& p) {
  if (!p.full_dimensional()) return {Rat(0), true};
  FaceLattice lat = face_lattice(p);
  Rat total = 0;
  for (const auto& s : triangulate(p, lat)) total += abs(simplex_det(p.vertices(), s));
  return {total / factorial(p.ambient_dim()), false};
}

// --------------------------------------------------------------------------
// Constructions

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<RatVec> pts;
  for (const auto& u : a.vertices()) {
    for (const auto& v : b.vertices()) {
      RatVec w(u);
      for (std::size_t k = 0; k < w.size(); ++k) w[k] += v[k];
      pts.push_back(std::move(w));
    }
  }
  return Polytope::from_points(a.ambient_dim(), std::move(pts));
}

Polytope cayley_sum(const Polytope& top, const Polytope& bottom) {
  if (top.ambient_dim() != bottom.ambient_dim()) throw std::invalid_argument("cayley_sum: dimension mismatch");
  std::vector<RatVec> pts;
  for (const auto& v : top.vertices()) {
    RatVec w(v);
    w.push_back(Rat(1));
    pts.push_back(std::move(w));
  }
  for (const auto& v : bottom.vertices()) {
    RatVec w(v);
    w.push_back(Rat(0));
    pts.push_back(std::move(w));
  }
  return Polytope::from_points(top.ambient_dim() + 1, std::move(pts));
}

Polytope scale(const Polytope& p, const Rat& factor) {
  std::vector<RatVec> pts = p.vertices();
  for (auto& v : pts) {
    for (auto& x : v) x *= factor;
  }
  return Polytope::from_points(p.ambient_dim(), std::move(pts));
}

Polytope translate(const Polytope& p, const RatVec& by) {
  if (by.size() != p.ambient_dim()) throw std::invalid_argument("translate: dimension mismatch");
  std::vector<RatVec> pts = p.vertices();
  for (auto& v : pts) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += by[k];
  }
  return Polytope::from_points(p.ambient_dim(), std::move(pts));
}

Polytope embed(const Polytope& p, std::size_t target_dim, const std::vector<std::size_t>& coordinate_map) {
  if (coordinate_map.size() != p.ambient_dim()) throw std::invalid_argument("embed: coordinate map has wrong length");
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices()) {
    RatVec w(target_dim);
    for (std::size_t k = 0; k < v.size(); ++k) w.at(coordinate_map[k]) = v[k];
    pts.push_back(std::move(w));
  }
  return Polytope::from_points(target_dim, std::move(pts));
}

Polytope linear_image(const Polytope& p, const RatMat& m) {
  if (m.empty()) throw std::invalid_argument("linear_image: empty matrix");
  std::vector<RatVec> pts;
  for (const auto& v : p.vertices()) {
    RatVec w;
    for (const auto& row : m) w.push_back(dot(row, v));
    pts.push_back(std::move(w));
  }
  return Polytope::from_points(m.size(), std::move(pts));
}

Polytope slice_last(const Polytope& p, const Rat& t) {
  if (!p.full_dimensional()) throw std::domain_error("slice_last: polytope is not full-dimensional");
  HPolytope h = p.h_rep();
  RatVec up(h.dim), down(h.dim);
  up.back() = 1;
  down.back() = -1;
  h.normals.push_back(up);
  h.offsets.push_back(t);
  h.normals.push_back(down);
  h.offsets.push_back(-t);
  std::vector<RatVec> pts;
  for (auto& v : enumerate_vertices(h)) {
    v.point.pop_back();
    pts.push_back(std::move(v.point));
  }
  return Polytope::from_points(h.dim - 1, std::move(pts));
}

Comparison compare(const Polytope& a, const Polytope& b) {
  if (a.ambient_dim() != b.ambient_dim()) return {false, "ambient dimensions differ"};
  if (a.vertices() == b.vertices() && a.facets() == b.facets()) return {true, ""};
  auto witness = [](const Polytope& x, const Polytope& y, const char* xname) -> std::string {
    for (const auto& v : x.vertices()) {
      if (std::binary_search(y.vertices().begin(), y.vertices().end(), v)) continue;
      if (y.full_dimensional()) {
        for (const auto& f : y.facets()) {
          if (dot(f.normal, v) > f.offset) {
            return std::string("vertex ") + to_string(v) + " of " + xname + " violates " + to_string(f.normal) +
                   ".x <= " + to_string(f.offset);
          }
        }
      }
      return std::string("vertex ") + to_string(v) + " of " + xname + " is not a vertex of the other";
    }
    return "";
  };
  std::string w = witness(a, b, "first");
  if (w.empty()) w = witness(b, a, "second");
  if (w.empty()) w = "facet lists differ";
  return {false, w};
}

// --------------------------------------------------------------------------
// Parametric machinery

VertexChart vertex_chart(const ParamPolytope& p, const RatVec& at) {
  HPolytope h = p.instantiate(at);
  const std::size_t n = p.dim;
  VertexChart chart;
  chart.reference = at;
  for (auto& v : enumerate_vertices(h)) {
    ChartVertex cv;
    cv.active = v.active;
    cv.point = v.point;
    cv.simple = v.active.size() == n;
    auto basis = independent_rows(h.normals, v.active, n);
    LinMap b(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) b.at(r, c) = h.normals[basis[r]][c];
    }
    // columns of the inverse
    std::vector<RatVec> inv_cols;
    for (std::size_t k = 0; k < n; ++k) {
      RatVec e(n);
      e[k] = 1;
      inv_cols.push_back(*solve(b, e));
    }
    for (std::size_t j = 0; j < n; ++j) {
      AffineForm x = AffineForm::zero(p.params.size());
      for (std::size_t k = 0; k < n; ++k) {
        if (inv_cols[k][j] != 0) x += p.ineqs[basis[k]].offset * inv_cols[k][j];
      }
      cv.coords.push_back(std::move(x));
    }
    for (auto i : v.active) {
      AffineForm lhs = AffineForm::zero(p.params.size());
      for (std::size_t j = 0; j < n; ++j) {
        if (p.ineqs[i].normal[j] != 0) lhs += cv.coords[j] * p.ineqs[i].normal[j];
      }
      if (lhs != p.ineqs[i].offset) {
        chart.inconsistencies.push_back("vertex " + to_string(v.point) + ": inequality " + std::to_string(i) +
                                        " is tight only at this parameter point");
      }
    }
    chart.vertices.push_back(std::move(cv));
  }
  return chart;
}

namespace {

// Determinant of a square matrix of polynomials by expansion over column subsets.
MPoly poly_determinant(const std::vector<std::vector<MPoly>>& m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  std::vector<MPoly> acc(std::size_t{1} << n, MPoly(vars));
  acc[0] = MPoly::constant(vars, Rat(1));
  for (std::size_t mask = 0; mask < acc.size(); ++mask) {
    if (acc[mask].is_zero()) continue;
    std::size_t row = static_cast<std::size_t>(std::popcount(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (std::size_t{1} << c)) continue;
      if (m[row][c].is_zero()) continue;
      int above = std::popcount(mask >> (c + 1));
      MPoly term = acc[mask] * m[row][c];
      if (above % 2) term = -term;
      acc[mask | (std::size_t{1} << c)] += term;
    }
  }
  return acc.back();
}

}  // namespace

MPoly volume_polynomial(const ParamPolytope& p, const RatVec& at) {
  VertexChart chart = vertex_chart(p, at);
  if (!chart.consistent()) throw std::domain_error("vertex chart inconsistent: " + chart.inconsistencies.front());
  Polytope poly = Polytope::from_h(p.instantiate(at));
  if (!poly.full_dimensional()) throw std::domain_error("volume_polynomial: polytope is not full-dimensional at the reference");
  FaceLattice lat = face_lattice(poly);
  const std::size_t n = p.dim;
  std::vector<std::vector<MPoly>> coords;
  for (const auto& v : chart.vertices) {
    std::vector<MPoly> row;
    for (const auto& x : v.coords) row.push_back(x.to_poly(p.params));
    coords.push_back(std::move(row));
  }
  MPoly total(p.params);
  for (const auto& s : triangulate(poly, lat)) {
    Rat sign = simplex_det(poly.vertices(), s) > 0 ? Rat(1) : Rat(-1);
    std::vector<std::vector<MPoly>> m;
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::vector<MPoly> row;
      for (std::size_t c = 0; c < n; ++c) row.push_back(coords[s[k]][c] - coords[s[0]][c]);
      m.push_back(std::move(row));
    }
    total += poly_determinant(m, p.params) * sign;
  }
  return total * (Rat(1) / factorial(n));
}

MPoly volume_polynomial(const ParamPolytope& p) { return volume_polynomial(p, p.reference); }

ParamPolytope family_hull(std::size_t dim, const std::vector<std::string>& params,
                          const std::vector<std::vector<AffineForm>>& points, const RatVec& reference) {
  std::vector<RatVec> at_ref;
  for (const auto& pt : points) {
    if (pt.size() != dim) throw std::invalid_argument("family_hull: point has wrong dimension");
    RatVec v;
    for (const auto& x : pt) v.push_back(x.evaluate(reference));
    at_ref.push_back(std::move(v));
  }
  Polytope hull = Polytope::from_points(dim, at_ref);
  if (!hull.full_dimensional()) throw std::domain_error("family_hull: hull is not full-dimensional at the reference");
  ParamPolytope out;
  out.dim = dim;
  out.params = params;
  out.reference = reference;
  for (const auto& f : hull.facets()) {
    std::optional<AffineForm> offset;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (dot(f.normal, at_ref[i]) != f.offset) continue;
      AffineForm h = AffineForm::zero(params.size());
      for (std::size_t k = 0; k < dim; ++k) {
        if (f.normal[k] != 0) h += points[i][k] * f.normal[k];
      }
      if (!offset) {
        offset = h;
      } else if (*offset != h) {
        throw std::domain_error("family_hull: reference point is not generic for facet " + to_string(f.normal));
      }
    }
    out.ineqs.push_back({f.normal, *offset});
  }
  return out;
}

ParamPolytope canonicalize(const ParamPolytope& p, std::vector<std::size_t>* removed) {
  std::vector<std::size_t> redundant;
  Polytope::from_h(p.instantiate(p.reference), &redundant);
  ParamPolytope out = p;
  out.ineqs.clear();
  for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
    if (std::binary_search(redundant.begin(), redundant.end(), i)) continue;
    Rat f = primitive_scale(p.ineqs[i].normal);
    Inequality q = p.ineqs[i];
    for (auto& x : q.normal) x *= f;
    q.offset *= f;
    out.ineqs.push_back(std::move(q));
  }
  if (removed) *removed = std::move(redundant);
  return out;
}

}  // namespace pushpull
