// FFLV polytopes, the tower of push-pull polytopes for the word (1,2,1,3,2)
// and the projective-bundle presentations of their rings.
//
// FFLV variables are indexed by positive roots (i,j), 1 <= i < j <= n, read
// off the triangular table
//
//   ...      l4        l3        l2        l1
//      ...        u6        u3        u1
//          ...        u5        u2
//              ...        u4
//
// so (i,j) -> (j-1)(j-2)/2 + i (1-based).
#pragma once

#include "pushpull/khp_ring.hpp"
#include "pushpull/polytope.hpp"
#include "pushpull/pushpull.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pushpull {

/// 1-based variable index of the root (i, j).
std::size_t fflv_index(std::size_t i, std::size_t j);
/// Printable table of variable positions for n rows of lambdas.
std::string fflv_table(std::size_t n);

/// Paths from l_i to l_j, each as the sorted 1-based variable indices it visits.
/// Steps go (p,q) -> (p,q+1) or (p+1,q) from (i,i+1) to (j-1,j).
std::vector<std::vector<std::size_t>> dyck_paths(std::size_t n, std::size_t i, std::size_t j);

/// u >= 0 and sum over each path from l_i to l_j <= l_j - l_i. Lambdas are
/// affine in `params`; throws std::domain_error when a bound is negative at
/// the reference.
ParamPolytope fflv_polytope(const std::vector<AffineForm>& lambdas, const std::vector<std::string>& params,
                            const RatVec& reference);
/// Numeric lambdas, no parameters.
ParamPolytope fflv_polytope(const RatVec& lambdas);

// --------------------------------------------------------------------------
// Projective-bundle presentations

/// base_relations plus new_var^2 - c1*new_var + c2. All polynomials share one
/// variable list. Throws std::invalid_argument on degree mismatch.
std::vector<MPoly> projective_bundle_presentation(const std::vector<MPoly>& base_relations, const MPoly& c1,
                                                  const MPoly& c2, const std::string& new_var);

/// Rewrites an operator over xi-variables in d-variables through a linear
/// dictionary (dictionary[i] = image of xi_i, degree one, over the d variables).
MPoly translate(const MPoly& op, const std::vector<MPoly>& dictionary);

// --------------------------------------------------------------------------
// The tower for (1,2,1,3,2)

struct TowerCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TowerStep {
  std::vector<int> word_prefix;
  ParamPolytope explicit_family;  // from the closed inequality lists
  std::optional<ParamPolytope> pushpull_family;  // from the previous step, absent for step 1
  std::vector<std::size_t> redundant;            // explicit inequalities that are not facets
  MPoly volume;                                  // over the step's parameters
  std::vector<std::size_t> hilbert;
  std::vector<MPoly> relations;   // over xi_1..xi_k
  std::vector<MPoly> dictionary;  // xi_i -> operators over the parameters
  std::vector<TowerCheck> checks;
  bool passed() const;
};

struct TowerOptions {
  /// Parameter values (a,b,c,d,e) at which the families are read off.
  RatVec reference = {Rat(13), Rat(7), Rat(5), Rat(3), Rat(1)};
};

/// Explicit families Delta_1..Delta_5 over (a), (a,b), ..., (a,b,c,d,e).
ParamPolytope tower_explicit(std::size_t step, const RatVec& reference);
/// Truncation data building step k+1 from the explicit family of step k (k = 1..4).
TruncationSpec tower_truncation(std::size_t step, const RatVec& reference);

std::vector<TowerStep> build_tower_12132(const TowerOptions& options = {});

struct MinkowskiCheck {
  bool passed = false;
  std::vector<std::pair<RatVec, Comparison>> samples;
};
/// P1(0,a) + P2(0,b,b+c) + P3(0,d,d+e,d+e) against Delta_5 at sample points
/// (a,b,c,d,e), the u6 coordinate dropped.
MinkowskiCheck check_minkowski_decomposition(const std::vector<RatVec>& samples);
Polytope fflv_minkowski_sum(const RatVec& abcde);

struct SelfIntersectionReport {
  MPoly volume;          // vol of Delta_5 over (a,b,c,d,e)
  MPoly socle;           // socle of the fifth power of the divisor class
  bool equal = false;    // volume == socle
  bool factorial = false;  // 5! * volume == socle
  Rat spot_volume;       // triangulated volume at (1,1,1,1,1)
  Rat spot_polynomial;   // volume polynomial at (1,1,1,1,1)
  std::string normalization() const;
};
SelfIntersectionReport check_prop_self_intersection(const TowerStep& step5);

}  // namespace pushpull
