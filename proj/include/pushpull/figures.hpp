// Static pictures of small push-pull polytopes: SVG for polygons, OFF for
// three-dimensional polytopes.
#pragma once

#include "pushpull/polytope.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pushpull {

std::string svg_polygon(const Polytope& p, const std::string& title);
std::string off_polytope(const Polytope& p);

struct FigureSet {
  std::string name;
  Polytope p, q, delta;
  std::vector<std::pair<std::string, std::string>> files;  // file name, contents
  std::vector<std::pair<std::string, bool>> checks;
};

/// P = triangle (0,0),(1,0),(0,1) and Q = P + [(0,0),(0,1)]; the push-pull
/// polytope has the combinatorics of the FFLV polytope for rho in A2.
FigureSet figure_triangle();
/// P = trapezoid (0,0),(2,0),(0,1),(1,1) and Q = P + [(0,0),(0,1)]; the
/// push-pull polytope is the triangle case plus the segment [0, e1].
FigureSet figure_trapezoid();

}  // namespace pushpull
