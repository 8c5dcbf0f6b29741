#include "support.hpp"

#include "pushpull/hull.hpp"
#include "pushpull/linalg.hpp"
#include "pushpull/mpoly.hpp"

using namespace pushpull;
using testing_support::poly;

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(parse_rat("6/4")) == "3/2");
  CHECK(to_string(parse_rat(" -2 ")) == "-2");
  CHECK(to_string(parse_rat("0/5")) == "0");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(primitive(RatVec{Rat(2, 3), Rat(4, 3)}) == RatVec{1, 2});
  CHECK(primitive(RatVec{0, 0}) == RatVec{0, 0});
}

TEST_CASE("polynomial arithmetic, parsing and printing") {
  std::vector<std::string> v{"a", "b"};
  MPoly p = poly("a*b + 1/2*b^2", v);
  CHECK(p.to_string() == "a * b + 1/2 * b^2");
  CHECK(MPoly::parse(p.to_string(), v) == p);
  CHECK(p.total_degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK(p.diff("b") == poly("a + b", v));
  CHECK((p * p).total_degree() == 4);
  CHECK((p - p).is_zero());
  CHECK(p.evaluate({Rat(2), Rat(1)}) == Rat(5, 2));
  CHECK(poly("-b^2/2", v) == poly("-1/2*b^2", v));
}

TEST_CASE("differential operators act by contraction") {
  std::vector<std::string> v{"a", "b"};
  MPoly vol = poly("a*b + 1/2*b^2", v);
  CHECK(apply_operator(poly("a^2", v), vol).is_zero());
  CHECK(apply_operator(poly("b^2 - a*b", v), vol).is_zero());
  CHECK(apply_operator(poly("b", v), vol) == poly("a + b", v));
  CHECK(monomials_of_degree(2, 2).size() == 3);
  CHECK(monomials_of_degree(3, 2).front() == Exponents{2, 0, 0});
}

TEST_CASE("substitution and variable lists") {
  std::vector<std::string> v{"a", "b"};
  MPoly p = poly("a^2 + b", v);
  std::vector<std::string> w{"x", "y", "z"};
  MPoly q = p.substitute({poly("x + y", w), poly("z", w)});
  CHECK(q == poly("x^2 + 2*x*y + y^2 + z", w));
  CHECK(q.used_vars() == std::vector<std::string>{"x", "y", "z"});
  CHECK(poly("y", w).with_vars({"y"}).nvars() == 1);
}

TEST_CASE("exact linear algebra") {
  LinMap m = LinMap::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(m.apply(k[0]) == RatVec{0, 0, 0});
  CHECK(determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  auto x = solve(LinMap::from_rows({{1, 1}, {1, -1}}, 2), {Rat(3), Rat(1)});
  REQUIRE(x);
  CHECK(*x == RatVec{2, 1});
  CHECK(!solve(LinMap::from_rows({{1, 1}, {1, 1}}, 2), {Rat(1), Rat(2)}));
  CHECK(affine_dimension({{0, 0}, {1, 1}, {2, 2}}) == 1);
}

TEST_CASE("extreme rays of a simplicial cone") {
  auto rays = extreme_rays({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(rays.size() == 3);
  auto square_cone = extreme_rays({{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}});
  CHECK(square_cone.size() == 4);
}
