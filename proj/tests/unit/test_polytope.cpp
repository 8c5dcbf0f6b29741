#include "support.hpp"

using namespace pushpull;
using testing_support::poly;
using testing_support::random_rat;

namespace {

Polytope unit_cube(std::size_t n) {
  HPolytope h;
  h.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    h.normals.push_back(e);
    h.offsets.push_back(1);
    e[i] = -1;
    h.normals.push_back(e);
    h.offsets.push_back(0);
  }
  return Polytope::from_h(h);
}

Polytope random_polygon(std::mt19937_64& rng) {
  for (;;) {
    std::vector<RatVec> pts;
    for (int k = 0; k < 5; ++k) pts.push_back({random_rat(rng, -6, 6), random_rat(rng, -6, 6)});
    Polytope p = Polytope::from_points(2, pts);
    if (p.full_dimensional()) return p;
  }
}

}  // namespace

TEST_CASE("unit cube: vertices, facets, volume, face lattice") {
  Polytope c = unit_cube(3);
  CHECK(c.vertices().size() == 8);
  CHECK(c.facets().size() == 6);
  CHECK(volume(c).value == 1);
  auto lattice = face_lattice(c);
  CHECK(lattice.f_vector() == std::vector<long>{8, 12, 6, 1});
  CHECK(lattice.euler_sum() == 1);
  CHECK(compare(Polytope::from_points(3, c.vertices()), c).equal);
  CHECK(codim2_faces(c).size() == 12);
}

TEST_CASE("redundant inequalities are reported") {
  HPolytope h = unit_cube(2).h_rep();
  h.normals.push_back({1, 1});
  h.offsets.push_back(5);
  h.normals.push_back({2, 0});
  h.offsets.push_back(2);
  std::vector<std::size_t> redundant;
  Polytope p = Polytope::from_h(h, &redundant);
  CHECK(p.facets().size() == 4);
  CHECK(redundant == std::vector<std::size_t>{4, 5});
}

TEST_CASE("unbounded systems are rejected") {
  HPolytope h;
  h.dim = 2;
  h.normals = {{-1, 0}, {0, -1}};
  h.offsets = {0, 0};
  CHECK_THROWS_AS(Polytope::from_h(h), std::domain_error);
}

TEST_CASE("trapezoid family volume is ab + b^2/2, free of the translation parameters") {
  ParamPolytope p = testing_support::trapezoid();
  MPoly vol = volume_polynomial(p);
  CHECK(vol == poly("a*b + 1/2*b^2", p.params));
  CHECK(vol.degree_in(p.param_index("x0")) == 0);
  CHECK(vol.degree_in(p.param_index("y0")) == 0);
  // same chamber, different translation
  CHECK(volume_polynomial(p, {Rat(3), Rat(2), Rat(-5), Rat(7, 2)}) == vol);
}

TEST_CASE("volume polynomial agrees with triangulated volume at random chamber points") {
  ParamPolytope p = testing_support::trapezoid();
  MPoly vol = volume_polynomial(p);
  std::mt19937_64 rng(12132);
  for (int k = 0; k < 10; ++k) {
    RatVec at{random_rat(rng, 1, 9), random_rat(rng, 1, 9), random_rat(rng, -5, 5), random_rat(rng, -5, 5)};
    CHECK(volume(Polytope::from_h(p.instantiate(at))).value == vol.evaluate(at));
  }
}

TEST_CASE("canonicalize drops redundant rows and rescales") {
  ParamPolytope p = testing_support::trapezoid();
  p.ineqs.push_back({{2, 0}, affine_from_terms(p.params, {{"a", 4}, {"b", 4}, {"x0", 2}})});
  std::vector<std::size_t> removed;
  ParamPolytope c = canonicalize(p, &removed);
  CHECK(removed == std::vector<std::size_t>{4});
  CHECK(c.ineqs.size() == 4);
}

TEST_CASE("cayley sum of equal layers is a prism") {
  Polytope sq = unit_cube(2);
  CHECK(compare(cayley_sum(sq, sq), unit_cube(3)).equal);
}

TEST_CASE("cayley slices interpolate the two layers") {
  std::mt19937_64 rng(12132);
  for (int trial = 0; trial < 8; ++trial) {
    Polytope top = random_polygon(rng), bottom = random_polygon(rng);
    Polytope c = cayley_sum(top, bottom);
    for (Rat t : {Rat(0), Rat(1, 2), Rat(1)}) {
      Polytope expected = t == 0   ? bottom
                          : t == 1 ? top
                                   : minkowski_sum(scale(top, t), scale(bottom, 1 - t));
      auto cmp = compare(slice_last(c, t), expected);
      CHECK_MESSAGE(cmp.equal, "trial " << trial << " t=" << to_string(t) << ": " << cmp.witness);
    }
  }
}

TEST_CASE("minkowski sum volume of squares scales") {
  Polytope sq = unit_cube(2);
  CHECK(volume(minkowski_sum(sq, sq)).value == 4);
  CHECK(compare(minkowski_sum(sq, sq), scale(sq, 2)).equal);
}

TEST_CASE("normal fans detect combinatorial differences") {
  Polytope sq = unit_cube(2);
  Polytope tri = Polytope::from_points(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(normal_fan(sq) == normal_fan(scale(sq, 3)));
  CHECK(!(normal_fan(sq) == normal_fan(tri)));
  CHECK(!describe_difference(normal_fan(sq), normal_fan(tri)).empty());
}

TEST_CASE("comparison names a separating inequality") {
  Polytope sq = unit_cube(2);
  auto cmp = compare(sq, scale(sq, 2));
  CHECK(!cmp.equal);
  CHECK(!cmp.witness.empty());
}

TEST_CASE("parametric hull reads offsets as affine forms") {
  std::vector<std::string> ps{"a"};
  auto A = [&](long c, long coef) { return AffineForm{Rat(c), RatVec{Rat(coef)}}; };
  // segment [0, a] x [0, 1]
  std::vector<std::vector<AffineForm>> pts{{A(0, 0), A(0, 0)}, {A(0, 1), A(0, 0)}, {A(0, 0), A(1, 0)}, {A(0, 1), A(1, 0)}};
  ParamPolytope h = family_hull(2, ps, pts, {Rat(2)});
  CHECK(volume_polynomial(h) == poly("a", ps));
}
