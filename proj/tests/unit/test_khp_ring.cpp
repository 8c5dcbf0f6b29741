#include "support.hpp"

using namespace pushpull;
using testing_support::poly;

namespace {

bool symmetric(const std::vector<std::size_t>& h) {
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d] != h[h.size() - 1 - d]) return false;
  }
  return true;
}

MPoly random_form(std::mt19937_64& rng, std::size_t nvars, int degree) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < nvars; ++i) vars.push_back("t" + std::to_string(i + 1));
  std::uniform_int_distribution<long> coef(-3, 3);
  MPoly p(vars);
  for (const auto& e : monomials_of_degree(nvars, degree)) {
    long c = coef(rng);
    if (c) p.add_term(e, Rat(c));
  }
  if (p.is_zero()) p.add_term(monomials_of_degree(nvars, degree).front(), Rat(1));
  return p;
}

}  // namespace

TEST_CASE("ring of the trapezoid: Hilbert function and relations") {
  std::vector<std::string> v{"a", "b"};
  KhpRing r = build_ring(poly("a*b + 1/2*b^2", v));
  CHECK(r.hilbert == std::vector<std::size_t>{1, 2, 1});
  CHECK(r.gorenstein);
  CHECK(r.total_rank() == 4);
  REQUIRE(r.annihilator.size() > 2);
  CHECK(r.annihilator[2].size() == 2);
  CHECK(is_relation(r, poly("a^2", v)));
  CHECK(is_relation(r, poly("b^2 - a*b", v)));
  CHECK(!is_relation(r, poly("b^2", v)));
  CHECK(presentation(r) == "Z[∂a,∂b]/(∂a^2, ∂b^2 - ∂a*∂b)");
}

TEST_CASE("classes multiply through their action on the volume") {
  std::vector<std::string> v{"a", "b"};
  KhpRing r = build_ring(poly("a*b + 1/2*b^2", v));
  RingClass da = make_class(r, poly("a", v)), db = make_class(r, poly("b", v));
  CHECK(multiply(db, db) == multiply(da, db));
  CHECK(multiply(da, da).is_zero());
  CHECK(socle_pairing(multiply(da, db)) == 1);
}

TEST_CASE("solving for an operator with a prescribed image") {
  std::vector<std::string> v{"a", "b"};
  KhpRing r = build_ring(poly("a*b + 1/2*b^2", v));
  auto sol = solve_for_operator(r, poly("a + b", v), 1);
  REQUIRE(sol.solvable());
  CHECK(apply_operator(*sol.particular, r.vol) == poly("a + b", v));
  CHECK(sol.kernel.empty());
}

TEST_CASE("quotient rank of a complete intersection") {
  std::vector<std::string> v{"x", "y"};
  auto q = quotient_rank({poly("x^2", v), poly("y^2", v)}, 3);
  CHECK(q.hilbert == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(q.total == 4);
}

TEST_CASE("inputs must be nonzero homogeneous") {
  std::vector<std::string> v{"a", "b"};
  CHECK_THROWS_AS(build_ring(MPoly(v)), std::invalid_argument);
  CHECK_THROWS_AS(build_ring(poly("a^2 + b", v)), std::invalid_argument);
}

TEST_CASE("every constructed ring has a symmetric Hilbert function") {
  std::mt19937_64 rng(12132);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + trial % 3;
    int d = 1 + trial % 4;
    MPoly f = random_form(rng, n, d);
    KhpRing r = build_ring(f);
    CHECK_MESSAGE(symmetric(r.hilbert), f.to_string());
    CHECK(r.gorenstein);
    CHECK(r.hilbert.front() == 1);
    CHECK(hilbert_function(f) == r.hilbert);
    // socle pairing is perfect: every nonzero degree-1 class pairs with something in top-1
    CHECK(r.hilbert.size() == static_cast<std::size_t>(d) + 1);
  }
}

TEST_CASE("power of a divisor evaluates to a multiple of the volume") {
  std::vector<std::string> v{"a", "b"};
  MPoly vol = poly("a*b + 1/2*b^2", v);
  KhpRing r = build_ring(vol);
  // (a d_a + b d_b)^2 vol = 2! vol
  MPoly s = power_socle(r, {poly("a", v), poly("b", v)});
  CHECK(s == Rat(2) * vol);
}
