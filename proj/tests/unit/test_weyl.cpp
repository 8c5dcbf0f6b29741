#include "support.hpp"

#include "pushpull/reports.hpp"

using namespace pushpull;
using testing_support::random_rat;

TEST_CASE("simple reflection in A2") {
  RootDatum a2 = type_a(2);
  const RatVec& a1 = a2.simple_roots[0];
  const RatVec& a2r = a2.simple_roots[1];
  RatVec sum(3);
  for (std::size_t i = 0; i < 3; ++i) sum[i] = a1[i] + a2r[i];
  CHECK(reflect_vector(a2.gram, a1, a2r) == sum);
  CHECK(pairing(a2.gram, a2r, a1) == -1);
  CHECK(pairing(a2.gram, a1, a1) == 2);
}

TEST_CASE("reflections are involutions and preserve the inner product") {
  RootDatum a3 = type_a(3);
  std::mt19937_64 rng(12132);
  for (int trial = 0; trial < 30; ++trial) {
    RatVec x(4), y(4);
    for (auto& c : x) c = random_rat(rng, -5, 5);
    for (auto& c : y) c = random_rat(rng, -5, 5);
    const RatVec& beta = a3.simple_roots[static_cast<std::size_t>(trial) % 3];
    RatVec sx = reflect_vector(a3.gram, beta, x), sy = reflect_vector(a3.gram, beta, y);
    CHECK(reflect_vector(a3.gram, beta, sx) == x);
    CHECK(inner(a3.gram, sx, sy) == inner(a3.gram, x, y));
    CHECK(pairing(a3.gram, sx, beta) == -pairing(a3.gram, x, beta));
  }
}

TEST_CASE("words are read right to left") {
  RootDatum a3 = type_a(3);
  BetaSequence b = betas_from_word(a3, {1, 2, 3});
  REQUIRE(b.length() == 3);
  CHECK(b.vectors[0] == a3.simple_roots[2]);
  CHECK(b.vectors[2] == a3.simple_roots[0]);
}

TEST_CASE("zero weight gives a point, one factor gives a segment") {
  RootDatum a2 = type_a(2);
  BetaSequence b = betas_from_word(a2, {1, 2});
  GKCube c = gk_cube(b, RatVec(3));
  CHECK(c.polytope().vertices().size() == 1);
  BetaSequence one = betas_from_word(a2, {1});
  GKCube seg = gk_cube(one, a2.rho);
  CHECK(seg.polytope().vertices().size() == 2);
  CHECK(seg.upper == RatVec{1});
}

TEST_CASE("cube status classification") {
  RootDatum a2 = type_a(2);
  GKCube c = gk_cube(betas_from_word(a2, {1, 2}), a2.rho);
  CHECK(c.status == CubeStatus::proper);
  CHECK(to_string(CubeStatus::twisted) == "twisted");
  // negative support number on the second factor
  CHECK(classify({{0}, {1, 0}}, {Rat(1), Rat(-3)}) == CubeStatus::twisted);
  CHECK(classify({{0}, {-1, 0}}, {Rat(0), Rat(0)}) == CubeStatus::degenerate);
}

TEST_CASE("dominant vertex is a vertex of the cube") {
  RootDatum a3 = type_a(3);
  BetaSequence b = betas_from_word(a3, {2, 1, 3});
  GKCube c = gk_cube(b, a3.rho);
  REQUIRE(c.status == CubeStatus::proper);
  RatVec dom = dominant_vertex(b, a3.rho);
  Polytope poly = c.polytope();
  const auto& vs = poly.vertices();
  CHECK(std::find(vs.begin(), vs.end(), dom) != vs.end());
}

TEST_CASE("lemma on the A2 word 1,2 holds without a shift") {
  RootDatum a2 = type_a(2);
  LemmaResult r = verify_lemma_demazure(betas_from_word(a2, {1, 2}), a2.rho, false);
  CHECK(r.precondition);
  CHECK(r.analogous);
}

TEST_CASE("lemma on the A2 word 1,2,1 holds after a shift") {
  RootDatum a2 = type_a(2);
  LemmaResult r = verify_lemma_demazure(betas_from_word(a2, {1, 2, 1}), a2.rho, true);
  CHECK(r.analogous);
}

TEST_CASE("class of the cube is the pairing combination of its facets") {
  RootDatum a3 = type_a(3);
  BetaSequence b = betas_from_word(a3, {1, 2, 1, 3, 2});
  PieriCheck pc = check_chevalley_pieri(b, a3.rho);
  CHECK_MESSAGE(pc.holds, pc.relation);
  RootDatum a2 = type_a(2);
  CHECK(check_chevalley_pieri(betas_from_word(a2, {1, 2}), a2.rho).holds);
}

TEST_CASE("top face projects onto the reflected tail cube") {
  RootDatum a2 = type_a(2);
  auto cmp = gamma_one_projection(betas_from_word(a2, {1, 2}), a2.rho);
  CHECK_MESSAGE(cmp.equal, cmp.witness);
}

TEST_CASE("seeded sweep over A2 and A3") {
  bool ok = false;
  Json sweep = gk_property_sweep(20, kDefaultSeed, &ok);
  CHECK_MESSAGE(ok, sweep.dump());
  CHECK(sweep["instances"].get<unsigned>() == 20);
  bool again = false;
  CHECK(gk_property_sweep(20, kDefaultSeed, &again) == sweep);
}

TEST_CASE("bad gram matrices are rejected") {
  BetaSequence b;
  b.vectors = {{1, 0}};
  b.gram = {{1, 2}, {2, 1}};
  CHECK_THROWS_AS(b.validate(), std::invalid_argument);
}
