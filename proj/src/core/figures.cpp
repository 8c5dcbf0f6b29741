#include "pushpull/figures.hpp"

#include "pushpull/bott_samelson.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pushpull {

namespace {

double to_double(const Rat& r) { return r.convert_to<double>(); }

// Indices of `ids` ordered counterclockwise around their centroid, using
// coordinates (i, j) of each point.
std::vector<std::size_t> cyclic_order(const std::vector<RatVec>& pts, std::vector<std::size_t> ids, std::size_t i,
                                      std::size_t j) {
  double cx = 0, cy = 0;
  for (auto k : ids) {
    cx += to_double(pts[k][i]);
    cy += to_double(pts[k][j]);
  }
  cx /= static_cast<double>(ids.size());
  cy /= static_cast<double>(ids.size());
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
    return std::atan2(to_double(pts[a][j]) - cy, to_double(pts[a][i]) - cx) <
           std::atan2(to_double(pts[b][j]) - cy, to_double(pts[b][i]) - cx);
  });
  return ids;
}

Polytope polygon(std::vector<RatVec> pts) { return Polytope::from_points(2, std::move(pts)); }

Polytope vertical_segment() { return Polytope::from_points(2, {RatVec{0, 0}, RatVec{0, 1}}); }

FigureSet assemble(const std::string& name, Polytope p) {
  FigureSet f;
  f.name = name;
  f.p = std::move(p);
  f.q = minkowski_sum(f.p, vertical_segment());
  f.delta = cayley_sum(f.p, f.q);
  f.files.emplace_back(name + "_P.svg", svg_polygon(f.p, "P"));
  f.files.emplace_back(name + "_Q.svg", svg_polygon(f.q, "Q"));
  f.files.emplace_back(name + "_Delta.off", off_polytope(f.delta));
  return f;
}

}  // namespace

std::string svg_polygon(const Polytope& p, const std::string& title) {
  if (p.ambient_dim() != 2 || !p.full_dimensional()) throw std::invalid_argument("svg_polygon: needs a polygon");
  const auto& v = p.vertices();
  std::vector<std::size_t> ids(v.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = k;
  ids = cyclic_order(v, ids, 0, 1);
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& x : v) {
    minx = std::min(minx, to_double(x[0]));
    maxx = std::max(maxx, to_double(x[0]));
    miny = std::min(miny, to_double(x[1]));
    maxy = std::max(maxy, to_double(x[1]));
  }
  const double unit = 80, pad = 20;
  const double w = (maxx - minx) * unit + 2 * pad, h = (maxy - miny) * unit + 2 * pad;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "  <title>" << title << "</title>\n";
  out << "  <polygon points=\"";
  for (std::size_t k = 0; k < ids.size(); ++k) {
    const auto& x = v[ids[k]];
    // y axis flipped so the picture reads like the usual plane
    out << (k ? " " : "") << pad + (to_double(x[0]) - minx) * unit << "," << pad + (maxy - to_double(x[1])) * unit;
  }
  out << "\" fill=\"#cfe3f5\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  for (const auto& x : v) {
    out << "  <circle cx=\"" << pad + (to_double(x[0]) - minx) * unit << "\" cy=\"" << pad + (maxy - to_double(x[1])) * unit
        << "\" r=\"3\" fill=\"#1f4e79\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string off_polytope(const Polytope& p) {
  if (p.ambient_dim() != 3 || !p.full_dimensional()) throw std::invalid_argument("off_polytope: needs a 3-polytope");
  const auto& v = p.vertices();
  const auto& facets = p.facets();
  std::ostringstream out;
  out << "OFF\n" << v.size() << " " << facets.size() << " 0\n";
  for (const auto& x : v) out << to_double(x[0]) << " " << to_double(x[1]) << " " << to_double(x[2]) << "\n";
  for (std::size_t f = 0; f < facets.size(); ++f) {
    // project along the largest normal coordinate, then orient outward
    const auto& n = facets[f].normal;
    std::size_t drop = 0;
    for (std::size_t k = 1; k < 3; ++k) {
      if (abs(n[k]) > abs(n[drop])) drop = k;
    }
    std::size_t i = drop == 0 ? 1 : 0, j = drop == 2 ? 1 : 2;
    auto ids = cyclic_order(v, p.facet_vertices()[f], i, j);
    if (n[drop] < 0) std::reverse(ids.begin(), ids.end());
    if (drop == 1) std::reverse(ids.begin(), ids.end());
    out << ids.size();
    for (auto k : ids) out << " " << k;
    out << "\n";
  }
  return out.str();
}

FigureSet figure_triangle() {
  FigureSet f = assemble("triangle", polygon({RatVec{0, 0}, RatVec{1, 0}, RatVec{0, 1}}));
  Polytope fflv = Polytope::from_h(fflv_polytope(RatVec{0, 1, 2}).at_reference());
  f.checks.emplace_back("f_vector_matches_fflv_rho", face_lattice(f.delta).f_vector() == face_lattice(fflv).f_vector());
  f.checks.emplace_back("volume_matches_fflv_rho", volume(f.delta).value == volume(fflv).value);
  return f;
}

FigureSet figure_trapezoid() {
  FigureSet f = assemble("trapezoid", polygon({RatVec{0, 0}, RatVec{2, 0}, RatVec{0, 1}, RatVec{1, 1}}));
  Polytope tri = figure_triangle().delta;
  Polytope seg = Polytope::from_points(3, {RatVec{0, 0, 0}, RatVec{1, 0, 0}});
  f.checks.emplace_back("equals_triangle_case_plus_segment", compare(f.delta, minkowski_sum(tri, seg)).equal);
  return f;
}

}  // namespace pushpull
