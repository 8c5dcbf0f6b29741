#include "support.hpp"

using namespace pushpull;
using testing_support::poly;
using testing_support::random_rat;

namespace {

const std::vector<TowerStep>& tower() {
  static const std::vector<TowerStep> steps = build_tower_12132();
  return steps;
}

const TowerCheck* find_check(const TowerStep& s, const std::string& name) {
  for (const auto& c : s.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("root indexing follows the triangular table") {
  CHECK(fflv_index(1, 2) == 1);
  CHECK(fflv_index(1, 3) == 2);
  CHECK(fflv_index(2, 3) == 3);
  CHECK(fflv_index(1, 4) == 4);
  CHECK(fflv_index(3, 4) == 6);
  CHECK(fflv_table(3).find("u1") != std::string::npos);
}

TEST_CASE("paths between lambdas") {
  CHECK(dyck_paths(3, 1, 3) == std::vector<std::vector<std::size_t>>{{1, 2, 3}});
  CHECK(dyck_paths(4, 1, 4) == std::vector<std::vector<std::size_t>>{{1, 2, 3, 5, 6}, {1, 2, 4, 5, 6}});
  CHECK(dyck_paths(4, 1, 2) == std::vector<std::vector<std::size_t>>{{1}});
  // Catalan counts along the long diagonal
  CHECK(dyck_paths(5, 1, 5).size() == 5);
  CHECK(dyck_paths(6, 1, 6).size() == 14);
}

TEST_CASE("FFLV polytope of rho in rank two") {
  Polytope p = Polytope::from_h(fflv_polytope(RatVec{0, 1, 2}).at_reference());
  CHECK(p.vertices().size() == 7);
  CHECK(volume(p).value == 1);
  CHECK_THROWS_AS(fflv_polytope(RatVec{0, 2, 1}), std::domain_error);
}

TEST_CASE("FFLV polytopes grow with the weight") {
  std::mt19937_64 rng(12132);
  for (int trial = 0; trial < 10; ++trial) {
    RatVec lam{0, random_rat(rng, 1, 4)};
    lam.push_back(lam[1] + random_rat(rng, 1, 4));
    lam.push_back(lam[2] + random_rat(rng, 1, 4));
    RatVec bigger = lam;
    Rat bump = random_rat(rng, 1, 3);
    for (std::size_t k = 1 + static_cast<std::size_t>(trial) % 3; k < 4; ++k) bigger[k] += bump;
    Polytope small = Polytope::from_h(fflv_polytope(lam).at_reference());
    Polytope big = Polytope::from_h(fflv_polytope(bigger).at_reference());
    for (const auto& v : small.vertices()) CHECK(big.contains(v));
  }
}

TEST_CASE("projective bundle presentation appends the quadratic relation") {
  std::vector<std::string> v{"x", "y"};
  auto rels = projective_bundle_presentation({poly("x^2", v)}, poly("x", v), MPoly(v), "y");
  REQUIRE(rels.size() == 2);
  CHECK(rels[1] == poly("y^2 - x*y", v));
  std::vector<std::string> d{"a", "b"};
  CHECK(translate(poly("x*y", v), {poly("a", d), poly("b - a", d)}) == poly("a*b - a^2", d));
}

TEST_CASE("tower steps have binomial Hilbert functions") {
  const auto& steps = tower();
  REQUIRE(steps.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<std::size_t> row{1};
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<std::size_t> next(row.size() + 1);
      for (std::size_t j = 0; j < row.size(); ++j) {
        next[j] += row[j];
        next[j + 1] += row[j];
      }
      row = next;
    }
    CHECK_MESSAGE(steps[k].hilbert == row, "step " << k + 1);
  }
}

TEST_CASE("tower steps one to four pass every check") {
  const auto& steps = tower();
  for (std::size_t k = 0; k < 4; ++k) {
    for (const auto& c : steps[k].checks) CHECK_MESSAGE(c.passed, "step " << k + 1 << " " << c.name << ": " << c.detail);
  }
}

TEST_CASE("tower step five: routes agree and the reduced relation holds") {
  const auto& s = tower()[4];
  for (const char* name : {"hilbert", "pushpull_theorem", "routes_agree", "reduced_xi5_relation", "substituted_relation",
                           "presentation_rank"}) {
    const TowerCheck* c = find_check(s, name);
    REQUIRE_MESSAGE(c, name);
    CHECK_MESSAGE(c->passed, name << ": " << c->detail);
  }
  CHECK(s.explicit_family.ineqs.size() == 16);
  CHECK(s.redundant.empty());
}

TEST_CASE("tower volume at step three") {
  std::vector<std::string> v{"a", "b", "c"};
  CHECK(tower()[2].volume.with_vars(v) == poly("a*b*c + 1/2*a*c^2 + 1/2*b^2*c + 1/2*b*c^2", v));
}

TEST_CASE("step five is a sum of FFLV polytopes") {
  MinkowskiCheck m = check_minkowski_decomposition({{1, 1, 1, 1, 1}, {2, 1, 3, 1, 2}, {Rat(1, 2), 3, Rat(2, 3), 1, 4}});
  for (const auto& [pt, cmp] : m.samples) CHECK_MESSAGE(cmp.equal, to_string(pt) << ": " << cmp.witness);
  CHECK(m.passed);
}

TEST_CASE("fifth power of the divisor class needs the factorial") {
  SelfIntersectionReport r = check_prop_self_intersection(tower()[4]);
  CHECK(r.factorial);
  CHECK(!r.equal);
  CHECK(r.normalization() == "5! * volume");
  CHECK(r.spot_volume == r.spot_polynomial);
}
