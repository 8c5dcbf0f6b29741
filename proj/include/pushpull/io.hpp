// JSON reading and writing for polytope families, truncation specs and reports.
//
// Rationals are written as strings ("3", "-1/2") and read from strings or
// integers. Affine offsets are read from numbers, expressions over the
// family's parameters ("a + b - 1/2") or {"const": ..., "<param>": ...}.
#pragma once

#include "json.hpp"

#include "pushpull/bott_samelson.hpp"
#include "pushpull/khp_ring.hpp"
#include "pushpull/polytope.hpp"
#include "pushpull/pushpull.hpp"
#include "pushpull/weyl.hpp"

#include <stdexcept>
#include <string>

namespace pushpull {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& r);
RatVec ratvec_from_json(const Json& j);
Json ratvec_to_json(const RatVec& v);
RatMat ratmat_from_json(const Json& j);
Json ratmat_to_json(const RatMat& m);

AffineForm affine_from_json(const Json& j, const std::vector<std::string>& params);

/// Accepts a family at top level or under "polytope", given either by
/// "inequalities" or by numeric "points".
ParamPolytope polytope_from_json(const Json& j);
Json polytope_to_json(const ParamPolytope& p);
/// Vertices and f-vector at the reference, or an "error" entry.
Json geometry_to_json(const ParamPolytope& p);

TruncationSpec truncation_from_json(const Json& j);
Json truncation_to_json(const TruncationSpec& t);
Json report_to_json(const VerificationReport& r);

Json ring_to_json(const KhpRing& ring, int max_degree = -1);

struct GkInput {
  BetaSequence betas;
  RatVec lambda;
  std::optional<std::vector<int>> word;
};
/// {"type": "A", "rank": n, "word": [...], "lambda": [...]} (lambda defaults
/// to rho) or {"betas": [...], "gram": [...], "lambda": [...]}.
GkInput gk_from_json(const Json& j);

Json tower_step_to_json(const TowerStep& s);

}  // namespace pushpull
