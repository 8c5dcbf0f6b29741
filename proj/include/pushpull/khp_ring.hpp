// Graded quotients Q[d_1..d_l]/Ann(f) of constant-coefficient differential
// operators by the annihilator of a homogeneous polynomial f.
//
// A class is identified with its action on f (the inverse-system
// fingerprint), so equality, products and relation checks reduce to exact
// differentiation and linear algebra. Operators are MPolys over the same
// variable list as f, variable i standing for d/d(variable i).
#pragma once

#include "pushpull/linalg.hpp"
#include "pushpull/mpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pushpull {

struct KhpRing {
  MPoly vol;
  int top = 0;  // degree of vol
  std::vector<std::size_t> hilbert;
  /// Per degree: operator monomials (lex descending) and the evaluation map
  /// from their span to the degree top-d polynomials.
  std::vector<std::vector<Exponents>> monomials;
  std::vector<std::vector<Exponents>> image_monomials;
  std::vector<LinMap> evaluation;
  std::vector<std::vector<MPoly>> basis;           // monomial basis of each graded piece
  std::vector<std::vector<MPoly>> annihilator;     // basis of Ann in each degree
  std::vector<std::vector<MPoly>> generators;      // minimal generators by degree, up to top+1
  bool generators_complete = true;                 // false when degree top+1 was skipped
  bool gorenstein = false;

  const std::vector<std::string>& vars() const { return vol.vars(); }
  std::size_t total_rank() const;
};

struct RingOptions {
  /// Degree top+1 generators are computed only when that degree has at most
  /// this many monomials.
  std::size_t max_monomials_top_plus_one = 1000;
};

/// Throws std::invalid_argument if vol is zero or not homogeneous.
KhpRing build_ring(const MPoly& vol, const RingOptions& options = {});

/// Ranks of the graded pieces only, without annihilators or generators.
std::vector<std::size_t> hilbert_function(const MPoly& vol);

struct RingClass {
  const KhpRing* ring = nullptr;
  MPoly rep;
  MPoly canonical;  // rep applied to vol
  int degree() const { return rep.is_zero() ? -1 : rep.total_degree(); }
  bool is_zero() const { return canonical.is_zero(); }
  friend bool operator==(const RingClass& a, const RingClass& b) { return a.canonical == b.canonical; }
};

RingClass make_class(const KhpRing& ring, const MPoly& rep);
RingClass class_of_polytope(const KhpRing& ring, const RatVec& coords);
RingClass multiply(const RingClass& x, const RingClass& y);
bool is_relation(const KhpRing& ring, const MPoly& op);
Rat socle_pairing(const RingClass& x);

struct OperatorSolutions {
  std::optional<MPoly> particular;  // supported on basis monomials
  std::vector<MPoly> kernel;        // the degree-d annihilator
  bool solvable() const { return particular.has_value(); }
};

/// All homogeneous degree-d operators D with D(vol) = target.
OperatorSolutions solve_for_operator(const KhpRing& ring, const MPoly& target, int degree);

/// (sum_i coeffs[i] * d_i)^top applied to vol, as a polynomial over the
/// variables of the coefficients.
MPoly power_socle(const KhpRing& ring, const std::vector<MPoly>& coeffs);

/// "Z[∂a,∂b]/(∂a^2, ∂b^2 - ∂a*∂b)".
std::string presentation(const KhpRing& ring);
std::string operator_text(const MPoly& op);

/// Number of independent operators in degrees 0..max_degree of the quotient
/// Q[vars]/(relations), together with its Hilbert function.
struct QuotientRank {
  std::vector<std::size_t> hilbert;
  std::size_t total = 0;
};
QuotientRank quotient_rank(const std::vector<MPoly>& relations, int max_degree);

}  // namespace pushpull
