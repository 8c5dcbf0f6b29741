// Codimension-two truncations, push-pull families and the checks that relate
// the ring of a push-pull polytope to the ring of its base.
//
// A truncation is described relative to a base family P(x): the truncated
// polytope is P(x + shift) cut by {psi_i <= Psi_i(x + shift) - depth_i}, where
// psi_i is maximized on the codimension-two face F_i (the meet of two facets)
// with maximum Psi_i. The push-pull family has coordinates (x, s):
//   Delta(s, x) = conv( P(x) x {s}  U  B(x, s) x {0} ),
// where B(x, s) = P(x + s*shift) cut by {psi_i <= Psi_i(x + s*shift) - s*depth_i}.
#pragma once

#include "pushpull/khp_ring.hpp"
#include "pushpull/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pushpull {

struct CutFace {
  std::size_t facet_a = 0;
  std::size_t facet_b = 0;
  std::optional<RatVec> psi;  // defaults to normal_a + normal_b
  Rat depth = 1;
};

struct TruncationSpec {
  ParamPolytope base;  // reference = parameters of P
  RatVec shift;        // parameters of P-hat minus those of P
  std::vector<CutFace> faces;
  std::string s_name = "s";
  /// Extra degree-two operators (over the base parameters) to try for the
  /// second Chern-type class before the computed candidates.
  std::vector<MPoly> c2_hints;

  RatVec hat_point() const;
  RatVec psi(std::size_t i) const;
};

/// Everything that makes a spec invalid, as human-readable strings.
std::vector<std::string> validate_truncation(const TruncationSpec& spec);

/// Maximum of psi_i over P(x), as an affine form in the base parameters.
AffineForm face_level(const TruncationSpec& spec, std::size_t i);

/// Family of Q over the base parameters (Q(x) = P(x + shift) truncated).
ParamPolytope build_truncation(const TruncationSpec& spec);

/// Family P(x) cut at Psi_i(x) - s*depth_i, over base parameters + [s].
ParamPolytope truncation_family(const TruncationSpec& spec);

struct QPolynomialData {
  std::vector<std::string> vars;  // base parameters followed by s
  MPoly q;                        // vol(P) - vol(truncation), over vars
  MPoly vol_f;                    // over base parameters
  std::vector<MPoly> g;           // g[j] for j = 0..n (entries 0..2 zero)
};

/// Throws std::domain_error if q has an s^0 or s^1 term.
QPolynomialData extract_q_data(const TruncationSpec& spec);

ParamPolytope build_pushpull_family(const TruncationSpec& spec);

/// Volume of the cut-off region at s = 1 by inclusion-exclusion over the
/// pieces P-hat intersected with {psi_i >= Psi_i(Q)}.
Rat cut_off_volume(const TruncationSpec& spec);

/// Operator sum_i shift_i * d/d(param i), over `vars`.
MPoly shift_operator(const TruncationSpec& spec, const std::vector<std::string>& vars);

/// (d_s^2 - c1 d_s + c2) applied to f, with f over base parameters + [s].
MPoly second_order_operator(const MPoly& f, const std::string& s_name, const MPoly& c1, const MPoly& c2);

/// Condition on q: (d_s^2 - c1 d_s + c2) q(s, x + s*shift) = vol_F(x + s*shift).
bool check_star_star(const TruncationSpec& spec, const QPolynomialData& qdata, const MPoly& c1, const MPoly& c2);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<std::string> base_vars;  // ring variables of the base
  MPoly vol_base;
  MPoly vol_delta;
  QPolynomialData qdata;
  std::string c1;
  std::string c2;
  std::string c2_choice;  // which candidate satisfied the condition on q
  std::string relation;   // x^2 - c1 x + c2 with x = d_s
  std::vector<std::size_t> hilbert_base;
  std::vector<std::size_t> hilbert_delta;
  std::vector<CheckResult> checks;
  std::vector<std::string> problems;  // validation failures, if any
  bool passed() const;
};

VerificationReport verify_theorem_main(const TruncationSpec& spec, bool fail_fast = false);

/// vol_Delta satisfies F'' - c1 F' + c2 F = 0 for some admissible c2.
bool check_ode(const TruncationSpec& spec);

/// Used variables of p, kept in the order of `order`.
std::vector<std::string> used_in_order(const MPoly& p, const std::vector<std::string>& order);

}  // namespace pushpull
