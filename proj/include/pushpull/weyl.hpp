// Reflections, Grossberg-Karshon cubes and their push-pull decomposition.
//
// A cube is given by vectors beta_1..beta_l with a Gram matrix and support
// numbers U_k; it is cut out by
//   x_k >= 0,   x_k + sum_{j<k} (beta_j, beta_k) x_j <= U_k,
// where (a, b) = 2<a,b>/<b,b>. For a weight lambda, U_k = (lambda, beta_k).
#pragma once

#include "pushpull/khp_ring.hpp"
#include "pushpull/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pushpull {

struct BetaSequence {
  RatMat vectors;  // beta_1..beta_l
  RatMat gram;     // positive definite, symmetric

  std::size_t length() const { return vectors.size(); }
  std::size_t ambient() const { return gram.size(); }
  /// Throws std::invalid_argument on a bad Gram matrix or a zero vector.
  void validate() const;
  BetaSequence tail() const;  // drops beta_1
};

Rat inner(const RatMat& gram, const RatVec& a, const RatVec& b);
/// 2<alpha, beta>/<beta, beta>.
Rat pairing(const RatMat& gram, const RatVec& alpha, const RatVec& beta);
/// alpha - (alpha, beta) beta.
RatVec reflect_vector(const RatMat& gram, const RatVec& beta, const RatVec& alpha);
/// Reflection through the hyperplane orthogonal to beta_i (0-based index).
RatVec reflect(const BetaSequence& betas, std::size_t i, const RatVec& alpha);

struct RootDatum {
  std::string type;
  std::size_t rank = 0;
  RatMat simple_roots;  // alpha_i = e_i - e_{i+1} in R^{rank+1}
  RatMat gram;
  RatVec rho;
};

RootDatum type_a(std::size_t rank);

/// Word (i_1..i_l), 1-based simple-root indices, to (beta_1..beta_l) = (alpha_{i_l}..alpha_{i_1}).
BetaSequence betas_from_word(const RootDatum& datum, const std::vector<int>& word);

enum class CubeStatus { proper, degenerate, twisted };
std::string to_string(CubeStatus s);

struct GKCube {
  BetaSequence betas;
  RatMat chain;  // chain[k][j] = (beta_j, beta_k) for j < k
  RatVec upper;  // support numbers U_k
  CubeStatus status = CubeStatus::proper;

  HPolytope h_rep() const;
  Polytope polytope() const;  // throws if twisted
};

RatMat chain_coefficients(const BetaSequence& betas);
/// Walks the chained bounds over every vertex of the previous cube.
CubeStatus classify(const RatMat& chain, const RatVec& upper);

RatVec support_numbers(const BetaSequence& betas, const RatVec& lambda);
GKCube gk_cube(const BetaSequence& betas, const RatVec& lambda);
GKCube gk_cube_from_support(const BetaSequence& betas, const RatVec& upper);

/// The cube as a family in lambda (parameters "l1".."lm").
ParamPolytope gk_family(const BetaSequence& betas, const RatVec& lambda_reference);
/// The cube with free support numbers: x_k >= -L_k and the chained bounds <= U_k.
ParamPolytope gk_support_family(const BetaSequence& betas, const RatVec& upper_reference);

/// Formula for the vertex where every upper bound is tight.
RatVec dominant_vertex(const BetaSequence& betas, const RatVec& lambda);
/// Coefficients of the cube's class in the basis of the facets {x_j = 0}.
RatVec chevalley_pieri(const BetaSequence& betas, const RatVec& lambda);

struct LemmaShift {
  Rat t = 0;
  RatVec w;  // added support numbers t * w
};

struct LemmaResult {
  bool precondition = false;
  bool analogous = false;
  std::optional<LemmaShift> shift;
  std::string detail;
};

/// Compares the normal fan of the cube (x_1 moved last) with the Cayley sum of
/// the tail cubes at lambda - beta_1 (top) and lambda (bottom). With
/// allow_shift, support numbers U(lambda) + t*w with w_k = m^(k-1) are tried
/// when the inputs are not all proper cubes, and the shift used is recorded.
LemmaResult verify_lemma_demazure(const BetaSequence& betas, const RatVec& lambda, bool allow_shift = false);

/// Checks in the ring of the support-number family that the class of the
/// cube equals sum_j c_j d/dL_j with c = chevalley_pieri(betas, lambda).
struct PieriCheck {
  bool holds = false;
  std::vector<std::size_t> hilbert;
  RatVec coefficients;
  std::optional<LemmaShift> reference_shift;
  std::string relation;
};
PieriCheck check_chevalley_pieri(const BetaSequence& betas, const RatVec& lambda);

/// The face {x_1 = (lambda, beta_1)} of a proper cube, projected along x_1,
/// against the tail cube at s_{beta_1}(lambda).
Comparison gamma_one_projection(const BetaSequence& betas, const RatVec& lambda);

/// Support numbers U(lambda) + t*w making the cube proper, searching t and w deterministically.
std::optional<LemmaShift> find_proper_shift(const BetaSequence& betas, const RatVec& upper);

}  // namespace pushpull
