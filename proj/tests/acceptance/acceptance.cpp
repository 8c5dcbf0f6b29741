// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "pushpull/io.hpp"
#include "pushpull/reports.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pushpull;

namespace {

#ifndef PP_TEST_DATA
#define PP_TEST_DATA "tests/data"
#endif

Json load(const std::string& name) {
  std::ifstream in(std::string(PP_TEST_DATA) + "/" + name);
  if (!in) throw std::runtime_error("missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return Json::parse(ss.str());
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

MPoly poly(const std::string& text, const std::vector<std::string>& vars) { return MPoly::parse(text, vars); }

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

bool symmetric(const std::vector<std::size_t>& h) {
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d] != h[h.size() - 1 - d]) return false;
  }
  return true;
}

Rat random_rat(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, 3);
  return Rat(num(rng)) / Rat(den(rng));
}

Outcome trapezoid_volume() {
  ParamPolytope p = polytope_from_json(load("trapezoid.json"));
  MPoly vol = volume_polynomial(p);
  bool exact = vol == poly("a*b + 1/2*b^2", p.params);
  bool free = vol.degree_in(p.param_index("x0")) == 0 && vol.degree_in(p.param_index("y0")) == 0;
  return {exact && free, "vol = " + vol.to_string()};
}

Outcome trapezoid_ring() {
  std::vector<std::string> v{"a", "b"};
  ParamPolytope p = polytope_from_json(load("trapezoid.json"));
  MPoly vol = volume_polynomial(p);
  KhpRing r = build_ring(vol.with_vars(used_in_order(vol, p.params)));
  bool hilbert = r.hilbert == std::vector<std::size_t>{1, 2, 1};
  bool span = r.annihilator.size() > 2 && r.annihilator[2].size() == 2 && is_relation(r, poly("a^2", v)) &&
              is_relation(r, poly("b^2 - a*b", v)) && !is_relation(r, poly("a*b", v));
  return {hilbert && span, presentation(r)};
}

Outcome trapezoid_pushpull() {
  TruncationSpec spec = truncation_from_json(load("trapezoid_truncation.json"));
  VerificationReport r = verify_theorem_main(spec);
  std::vector<std::string> v{"a", "b", "s"};
  MPoly vd = r.vol_delta.with_vars(v);
  bool vol = vd == poly("s*a*b + 1/2*s*b^2 + 1/2*s^2*a + 1/2*s^2*b", v);
  bool rel = apply_operator(poly("s^2 - b*s + a*b", v), vd).is_zero();
  std::size_t passed = 0;
  for (const auto& c : r.checks) passed += c.passed;
  return {vol && rel && r.checks.size() == 5 && passed == 5,
          "vol_delta = " + vd.to_string() + ", " + std::to_string(passed) + "/5 checks"};
}

Outcome odes() {
  bool trap = check_ode(truncation_from_json(load("trapezoid_truncation.json")));
  bool prism = check_ode(truncation_from_json(load("square_prism.json")));
  bool last = check_ode(tower_truncation(4, TowerOptions{}.reference));
  return {trap && prism && last, std::string("trapezoid ") + (trap ? "ok" : "fails") + ", prism " +
                                     (prism ? "ok" : "fails") + ", last tower step " + (last ? "ok" : "fails")};
}

Outcome tower_relations() {
  const auto& steps = tower();
  std::string detail;
  bool ok = steps.size() == 5;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const TowerStep& s = steps[k];
    std::size_t total = 0;
    for (auto h : s.hilbert) total += h;
    bool hilbert = total == (std::size_t{1} << (k + 1)) && s.hilbert.size() == k + 2 && symmetric(s.hilbert);
    const TowerCheck* rel = find_check(s, "relations_annihilate");
    bool rels = rel && rel->passed;
    if (!hilbert || !rels) {
      ok = false;
      detail += "step " + std::to_string(k + 1) + ": " + (hilbert ? "" : "hilbert mismatch; ") +
                (rel ? rel->detail : "no relation check") + "; ";
    }
  }
  if (ok) detail = "hilbert (1+t)^k and all translated relations annihilate for k=1..5";
  return {ok, detail};
}

Outcome route_equivalence() {
  const auto& steps = tower();
  bool ok = true;
  std::string detail;
  for (std::size_t k : {3u, 4u}) {
    const TowerCheck* c = find_check(steps[k], "routes_agree");
    ok = ok && c && c->passed;
    detail += "step " + std::to_string(k + 1) + ": " + (c ? c->detail : "missing") + "; ";
  }
  detail += "step 5 lists " + std::to_string(steps[4].explicit_family.ineqs.size()) + " inequalities, " +
            std::to_string(steps[4].redundant.size()) + " redundant";
  return {ok, detail};
}

Outcome minkowski() {
  RationalSampler rng(kDefaultSeed);
  std::vector<RatVec> pts;
  for (int k = 0; k < 3; ++k) {
    RatVec v(5);
    for (auto& x : v) x = rng.positive();
    pts.push_back(v);
  }
  MinkowskiCheck m = check_minkowski_decomposition(pts);
  std::string detail = std::to_string(m.samples.size()) + " seeded points";
  for (const auto& [pt, cmp] : m.samples) {
    if (!cmp.equal) detail += "; " + to_string(pt) + ": " + cmp.witness;
  }
  return {m.passed && m.samples.size() >= 3, detail};
}

Outcome self_intersection() {
  SelfIntersectionReport r = check_prop_self_intersection(tower()[4]);
  bool one = r.equal != r.factorial;
  return {one && r.spot_volume == r.spot_polynomial, "normalization " + r.normalization()};
}

Outcome gk_cubes() {
  bool ok = false;
  Json sweep = gk_property_sweep(20, kDefaultSeed, &ok);
  return {ok, std::to_string(sweep["instances"].get<unsigned>()) + " instances, " +
                  std::to_string(sweep["generic_instances"].get<unsigned>()) + " generic, " +
                  std::to_string(sweep["lemma_instances"].get<unsigned>()) + " under the lemma, " +
                  std::to_string(sweep["failures"].size()) + " failures"};
}

Outcome property_suites() {
  std::mt19937_64 rng(kDefaultSeed);
  std::size_t rings = 0, truncations = 0, slices = 0, reflections = 0;
  std::string bad;

  // symmetric Hilbert functions for every ring built here
  std::vector<MPoly> vols;
  for (const auto& s : tower()) vols.push_back(s.volume);
  vols.push_back(verify_theorem_main(truncation_from_json(load("trapezoid_truncation.json"))).vol_delta);
  for (int k = 0; k < 10; ++k) {
    std::vector<std::string> v{"t1", "t2", "t3"};
    MPoly f(v);
    std::uniform_int_distribution<long> c(-3, 3);
    for (const auto& e : monomials_of_degree(3, 1 + k % 4)) f.add_term(e, Rat(c(rng)));
    if (!f.is_zero()) vols.push_back(f);
  }
  for (const auto& f : vols) {
    KhpRing r = build_ring(f.with_vars(f.used_vars()));
    ++rings;
    if (!symmetric(r.hilbert) || !r.gorenstein) bad += "asymmetric ring for " + f.to_string() + "; ";
  }

  // cut-off identity
  std::vector<TruncationSpec> specs;
  for (int k = 0; k < 8; ++k) {
    TruncationSpec s = truncation_from_json(load("trapezoid_truncation.json"));
    s.base.reference = {random_rat(rng, 1, 9), random_rat(rng, 1, 9), random_rat(rng, -3, 3), random_rat(rng, -3, 3)};
    specs.push_back(s);
  }
  specs.push_back(truncation_from_json(load("square_prism.json")));
  for (std::size_t k = 1; k <= 4; ++k) specs.push_back(tower_truncation(k, TowerOptions{}.reference));
  for (const auto& s : specs) {
    if (!validate_truncation(s).empty()) continue;
    ++truncations;
    Rat hat = volume(Polytope::from_h(s.base.instantiate(s.hat_point()))).value;
    Rat q = volume(Polytope::from_h(build_truncation(s).at_reference())).value;
    if (hat != q + cut_off_volume(s)) bad += "cut-off identity fails; ";
  }

  // slices of Cayley sums
  auto polygon = [&] {
    for (;;) {
      std::vector<RatVec> pts;
      for (int k = 0; k < 5; ++k) pts.push_back({random_rat(rng, -5, 5), random_rat(rng, -5, 5)});
      Polytope p = Polytope::from_points(2, pts);
      if (p.full_dimensional()) return p;
    }
  };
  for (int k = 0; k < 6; ++k) {
    Polytope top = polygon(), bottom = polygon();
    Polytope c = cayley_sum(top, bottom);
    for (Rat t : {Rat(0), Rat(1, 2), Rat(1)}) {
      Polytope expected = t == 0 ? bottom : t == 1 ? top : minkowski_sum(scale(top, t), scale(bottom, 1 - t));
      ++slices;
      auto cmp = compare(slice_last(c, t), expected);
      if (!cmp.equal) bad += "slice at " + to_string(t) + ": " + cmp.witness + "; ";
    }
  }

  // reflections
  RootDatum a3 = type_a(3);
  for (int k = 0; k < 30; ++k) {
    RatVec x(4), y(4);
    for (auto& c : x) c = random_rat(rng, -5, 5);
    for (auto& c : y) c = random_rat(rng, -5, 5);
    const RatVec& beta = a3.simple_roots[static_cast<std::size_t>(k) % 3];
    RatVec sx = reflect_vector(a3.gram, beta, x), sy = reflect_vector(a3.gram, beta, y);
    ++reflections;
    if (reflect_vector(a3.gram, beta, sx) != x || inner(a3.gram, sx, sy) != inner(a3.gram, x, y)) {
      bad += "reflection property fails; ";
    }
  }

  std::string counts = std::to_string(rings) + " rings, " + std::to_string(truncations) + " truncations, " +
                       std::to_string(slices) + " slices, " + std::to_string(reflections) + " reflections";
  return {bad.empty() && truncations >= 8, bad.empty() ? counts : counts + "; " + bad};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"trapezoid volume polynomial", trapezoid_volume},
      {"trapezoid ring presentation", trapezoid_ring},
      {"trapezoid push-pull", trapezoid_pushpull},
      {"second-order equations", odes},
      {"tower Hilbert functions and relations", tower_relations},
      {"route equivalence", route_equivalence},
      {"Minkowski decomposition", minkowski},
      {"self-intersection normalization", self_intersection},
      {"GK cube properties", gk_cubes},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
