#include "support.hpp"

using namespace pushpull;
using testing_support::load;
using testing_support::poly;
using testing_support::random_rat;

namespace {

TruncationSpec trapezoid_spec() { return truncation_from_json(load("trapezoid_truncation.json")); }
TruncationSpec prism_spec() { return truncation_from_json(load("square_prism.json")); }

Rat cut_identity_gap(const TruncationSpec& spec) {
  Rat hat = volume(Polytope::from_h(spec.base.instantiate(spec.hat_point()))).value;
  Rat q = volume(Polytope::from_h(build_truncation(spec).at_reference())).value;
  return hat - q - cut_off_volume(spec);
}

}  // namespace

TEST_CASE("trapezoid truncation passes every push-pull check") {
  TruncationSpec spec = trapezoid_spec();
  CHECK(validate_truncation(spec).empty());
  VerificationReport r = verify_theorem_main(spec);
  CHECK(r.checks.size() == 5);
  for (const auto& c : r.checks) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
  CHECK(r.passed());
  std::vector<std::string> v{"a", "b", "s"};
  CHECK(r.vol_delta.with_vars(v) == poly("s*a*b + 1/2*s*b^2 + 1/2*s^2*a + 1/2*s^2*b", v));
  CHECK(apply_operator(poly("s^2 - b*s + a*b", v), r.vol_delta.with_vars(v)).is_zero());
  CHECK(r.hilbert_delta == std::vector<std::size_t>{1, 3, 3, 1});
}

TEST_CASE("push-pull family volume matches the triangulated volume") {
  TruncationSpec spec = trapezoid_spec();
  ParamPolytope fam = build_pushpull_family(spec);
  MPoly vol = volume_polynomial(fam);
  CHECK(volume(Polytope::from_h(fam.at_reference())).value == vol.evaluate(fam.reference));
}

TEST_CASE("truncation at zero shift with no faces gives a prism") {
  TruncationSpec spec = prism_spec();
  CHECK(validate_truncation(spec).empty());
  VerificationReport r = verify_theorem_main(spec);
  CHECK(r.passed());
  std::vector<std::string> v{"a", "b", "s"};
  CHECK(r.vol_delta.with_vars(v) == poly("s*a*b", v));
  CHECK(check_ode(spec));
}

TEST_CASE("the second-order equation holds for the trapezoid family") { CHECK(check_ode(trapezoid_spec())); }

TEST_CASE("invalid truncations are reported") {
  TruncationSpec spec = trapezoid_spec();
  spec.faces[0].facet_b = 9;
  CHECK(!validate_truncation(spec).empty());
  spec = trapezoid_spec();
  spec.shift = {Rat(1)};
  CHECK(!validate_truncation(spec).empty());
}

TEST_CASE("cut-off volume identity across random references") {
  std::mt19937_64 rng(12132);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    TruncationSpec spec = trapezoid_spec();
    spec.base.reference = {random_rat(rng, 1, 9), random_rat(rng, 1, 9), random_rat(rng, -4, 4), random_rat(rng, -4, 4)};
    if (!validate_truncation(spec).empty()) continue;
    ++checked;
    CHECK(cut_identity_gap(spec) == 0);
  }
  for (std::size_t step = 1; step <= 4; ++step) {
    TruncationSpec spec = tower_truncation(step, TowerOptions{}.reference);
    REQUIRE(validate_truncation(spec).empty());
    ++checked;
    CHECK_MESSAGE(cut_identity_gap(spec) == 0, "tower step " << step);
  }
  CHECK(checked >= 8);
}

TEST_CASE("truncation specs round-trip through JSON") {
  TruncationSpec spec = trapezoid_spec();
  Json j = truncation_to_json(spec);
  TruncationSpec back = truncation_from_json(j);
  CHECK(truncation_to_json(back) == j);
}

TEST_CASE("used variables follow the given order") {
  std::vector<std::string> v{"a", "b", "c"};
  CHECK(used_in_order(poly("c*a", v), {"c", "b", "a"}) == std::vector<std::string>{"c", "a"});
}
