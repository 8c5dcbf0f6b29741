#include "pushpull/reports.hpp"

#include "pushpull/figures.hpp"

#include <algorithm>

namespace pushpull {

namespace {

Json check_json(const std::string& name, bool passed, const std::string& detail = "") {
  Json j{{"name", name}, {"passed", passed}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

Json shift_json(const LemmaShift& s) { return {{"t", rat_to_json(s.t)}, {"w", ratvec_to_json(s.w)}}; }

ParamPolytope numeric_family(const HPolytope& h) {
  ParamPolytope p;
  p.dim = h.dim;
  for (std::size_t i = 0; i < h.normals.size(); ++i) {
    p.ineqs.push_back({h.normals[i], AffineForm::constant_form(0, h.offsets[i])});
  }
  return p;
}

bool all_nonzero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
}

struct VertexFacts {
  bool contains_dominant = false;
  bool unique_all_nonzero = false;
};

VertexFacts vertex_facts(const GKCube& cube, const RatVec& dominant) {
  VertexFacts f;
  Polytope p = cube.polytope();
  std::size_t nonzero = 0;
  for (const auto& v : p.vertices()) {
    if (v == dominant) f.contains_dominant = true;
    if (all_nonzero(v)) ++nonzero;
  }
  f.unique_all_nonzero = nonzero == 1 && f.contains_dominant && all_nonzero(dominant);
  return f;
}

}  // namespace

Rat RationalSampler::positive() {
  std::uniform_int_distribution<long> num(1, 9), den(1, 3);
  return Rat(num(rng_)) / Rat(den(rng_));
}

long RationalSampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Report build_report(const ParamPolytope& p) {
  Report r;
  std::vector<std::size_t> removed;
  ParamPolytope canon = canonicalize(p, &removed);
  r.json["polytope"] = polytope_to_json(canon);
  r.json["removed"] = removed;
  r.json["geometry"] = geometry_to_json(canon);
  return r;
}

Report volume_report(const ParamPolytope& p) {
  Report r;
  MPoly vol = volume_polynomial(p);
  r.json["polytope"] = polytope_to_json(p);
  r.json["params"] = p.params;
  r.json["volume"] = vol.to_string();
  r.json["at_reference"] = rat_to_json(vol.evaluate(p.reference));
  return r;
}

Report ring_report(const ParamPolytope& p, int max_degree) {
  Report r;
  MPoly vol = volume_polynomial(p);
  auto used = used_in_order(vol, p.params);
  std::vector<std::string> dropped;
  for (const auto& name : p.params) {
    if (std::find(used.begin(), used.end(), name) == used.end()) dropped.push_back(name);
  }
  KhpRing ring = build_ring(vol.with_vars(used));
  r.json["polytope"] = polytope_to_json(p);
  r.json["dropped_params"] = dropped;
  r.json["ring"] = ring_to_json(ring, max_degree);
  return r;
}

Report pushpull_report(const TruncationSpec& spec, bool fail_fast) {
  auto problems = validate_truncation(spec);
  if (!problems.empty()) {
    std::string all;
    for (const auto& p : problems) all += (all.empty() ? "" : "; ") + p;
    throw InputError("invalid truncation: " + all);
  }
  Report r;
  VerificationReport rep = verify_theorem_main(spec, fail_fast);
  r.json["report"] = report_to_json(rep);
  r.passed = rep.passed();
  if (!rep.passed() && fail_fast) return r;

  Json extra = Json::array();
  Rat hat = volume(Polytope::from_h(spec.base.instantiate(spec.hat_point()))).value;
  ParamPolytope q = build_truncation(spec);
  Rat trunc = volume(Polytope::from_h(q.at_reference())).value;
  Rat cut = cut_off_volume(spec);
  bool identity = hat == trunc + cut;
  extra.push_back(check_json("cut_off_identity", identity,
                             to_string(hat) + " = " + to_string(trunc) + " + " + to_string(cut)));
  bool ode = check_ode(spec);
  extra.push_back(check_json("second_order_ode", ode));
  r.json["extra_checks"] = extra;
  r.passed = r.passed && identity && ode;
  r.json["polytope"] = polytope_to_json(canonicalize(build_pushpull_family(spec)));
  return r;
}

Json gk_property_sweep(unsigned count, std::uint64_t seed, bool* passed) {
  RationalSampler rng(seed);
  Json out;
  Json failures = Json::array();
  unsigned found = 0, attempts = 0, generic = 0, lemma_checked = 0;
  const unsigned max_attempts = 200 * std::max(1u, count);
  while (found < count && attempts < max_attempts) {
    ++attempts;
    const std::size_t rank = static_cast<std::size_t>(rng.integer(2, 3));
    RootDatum d = type_a(rank);
    std::vector<int> word(static_cast<std::size_t>(rng.integer(1, 4)));
    for (auto& w : word) w = static_cast<int>(rng.integer(1, static_cast<long>(rank)));
    RatVec lambda(rank + 1);
    for (auto& x : lambda) x = Rat(rng.integer(-2, 4));
    BetaSequence b = betas_from_word(d, word);
    GKCube cube = gk_cube(b, lambda);
    if (cube.status != CubeStatus::proper) continue;
    ++found;
    RatVec dom = dominant_vertex(b, lambda);
    VertexFacts f = vertex_facts(cube, dom);
    Json inst{{"rank", rank}, {"word", word}, {"lambda", ratvec_to_json(lambda)}};
    if (!f.contains_dominant) {
      inst["failure"] = "dominant vertex " + to_string(dom) + " is not a vertex";
      failures.push_back(inst);
      continue;
    }
    if (all_nonzero(dom)) {
      ++generic;
      if (!f.unique_all_nonzero) {
        inst["failure"] = "dominant vertex is not the unique all-nonzero vertex";
        failures.push_back(inst);
        continue;
      }
    }
    LemmaResult lemma = verify_lemma_demazure(b, lambda, false);
    if (lemma.precondition) {
      ++lemma_checked;
      if (!lemma.analogous) {
        inst["failure"] = "lemma: " + lemma.detail;
        failures.push_back(inst);
      }
    }
  }
  out["seed"] = seed;
  out["requested"] = count;
  out["instances"] = found;
  out["attempts"] = attempts;
  out["generic_instances"] = generic;
  out["lemma_instances"] = lemma_checked;
  out["failures"] = failures;
  *passed = found == count && failures.empty();
  return out;
}

Report gk_report(const GkInput& in, unsigned samples, std::uint64_t seed) {
  Report r;
  const auto& b = in.betas;
  GKCube cube = gk_cube(b, in.lambda);
  RatVec dom = dominant_vertex(b, in.lambda);
  Json checks = Json::array();
  Json inst;
  if (in.word) inst["word"] = *in.word;
  inst["betas"] = ratmat_to_json(b.vectors);
  inst["lambda"] = ratvec_to_json(in.lambda);
  inst["support_numbers"] = ratvec_to_json(cube.upper);
  inst["status"] = to_string(cube.status);
  inst["dominant_vertex"] = ratvec_to_json(dom);
  inst["chevalley_pieri"] = ratvec_to_json(chevalley_pieri(b, in.lambda));

  if (cube.status != CubeStatus::twisted) {
    VertexFacts f = vertex_facts(cube, dom);
    Json verts = Json::array();
    Polytope poly = cube.polytope();
    for (const auto& v : poly.vertices()) verts.push_back(ratvec_to_json(v));
    inst["vertices"] = verts;
    checks.push_back(check_json("dominant_vertex_is_vertex", f.contains_dominant));
    if (all_nonzero(dom)) checks.push_back(check_json("unique_all_nonzero_vertex", f.unique_all_nonzero));
    if (cube.status == CubeStatus::proper && b.length() >= 2) {
      Comparison c = gamma_one_projection(b, in.lambda);
      checks.push_back(check_json("top_face_projection", c.equal, c.witness));
    }
  }

  LemmaResult lemma = verify_lemma_demazure(b, in.lambda, true);
  Json lj{{"precondition", lemma.precondition}, {"analogous", lemma.analogous}, {"detail", lemma.detail}};
  if (lemma.shift) lj["shift"] = shift_json(*lemma.shift);
  inst["lemma"] = lj;
  checks.push_back(check_json("lemma_analogous", lemma.analogous, lemma.shift ? "after shifting support numbers" : ""));

  PieriCheck pc = check_chevalley_pieri(b, in.lambda);
  Json pj{{"holds", pc.holds}, {"relation", pc.relation}};
  Json h = Json::array();
  for (auto x : pc.hilbert) h.push_back(x);
  pj["hilbert"] = h;
  if (pc.reference_shift) pj["reference_shift"] = shift_json(*pc.reference_shift);
  inst["chevalley_pieri_check"] = pj;
  checks.push_back(check_json("chevalley_pieri_relation", pc.holds, pc.relation));

  inst["checks"] = checks;
  r.json["instance"] = inst;
  r.passed = std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["passed"].get<bool>(); });

  if (samples > 0) {
    bool ok = false;
    r.json["sweep"] = gk_property_sweep(samples, seed, &ok);
    r.passed = r.passed && ok;
  }

  // a drawable member of the family: the cube itself, or its shifted stand-in
  if (cube.status != CubeStatus::twisted) {
    r.json["polytope"] = polytope_to_json(numeric_family(cube.h_rep()));
  } else if (auto s = find_proper_shift(b, cube.upper)) {
    RatVec u = cube.upper;
    for (std::size_t k = 0; k < u.size(); ++k) u[k] += s->t * s->w[k];
    r.json["polytope"] = polytope_to_json(numeric_family(gk_cube_from_support(b, u).h_rep()));
  }
  return r;
}

Report fflv_report(const Json& input) {
  if (!input.is_object() || !input.contains("lambdas")) throw InputError("fflv input needs \"lambdas\"");
  std::vector<std::string> params;
  RatVec reference;
  if (input.contains("params")) params = input["params"].get<std::vector<std::string>>();
  if (input.contains("reference")) reference = ratvec_from_json(input["reference"]);
  if (reference.size() != params.size()) throw InputError("\"reference\" needs one value per parameter");
  std::vector<AffineForm> lambdas;
  for (const auto& l : input["lambdas"]) lambdas.push_back(affine_from_json(l, params));
  ParamPolytope p;
  try {
    p = fflv_polytope(lambdas, params, reference);
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::size_t n = lambdas.size();
  Report r;
  r.json["table"] = fflv_table(n);
  Json paths = Json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) paths.push_back({{"from", i}, {"to", j}, {"paths", dyck_paths(n, i, j)}});
  }
  r.json["paths"] = paths;
  r.json["polytope"] = polytope_to_json(p);
  r.json["geometry"] = geometry_to_json(p);
  Polytope inst = Polytope::from_h(p.at_reference());
  if (inst.full_dimensional()) {
    if (params.empty()) {
      r.json["volume"] = rat_to_json(volume(inst).value);
    } else {
      r.json["volume"] = volume_polynomial(p).to_string();
    }
  } else {
    r.json["volume"] = "0";
    r.json["note"] = "not full-dimensional at the reference";
  }
  return r;
}

Report tower_report(unsigned samples, std::uint64_t seed) {
  Report r;
  auto steps = build_tower_12132();
  Json sj = Json::array();
  for (const auto& s : steps) {
    sj.push_back(tower_step_to_json(s));
    r.passed = r.passed && s.passed();
  }
  r.json["steps"] = sj;

  RationalSampler rng(seed);
  std::vector<RatVec> points;
  for (unsigned k = 0; k < std::max(3u, samples); ++k) {
    RatVec v(5);
    for (auto& x : v) x = rng.positive();
    points.push_back(v);
  }
  points.push_back({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
  MinkowskiCheck mk = check_minkowski_decomposition(points);
  Json mj{{"seed", seed}, {"passed", mk.passed}};
  Json samples_json = Json::array();
  for (const auto& [pt, cmp] : mk.samples) {
    Json e{{"point", ratvec_to_json(pt)}, {"equal", cmp.equal}};
    if (!cmp.equal) e["witness"] = cmp.witness;
    samples_json.push_back(e);
  }
  mj["samples"] = samples_json;
  r.json["minkowski"] = mj;
  r.passed = r.passed && mk.passed;

  SelfIntersectionReport si = check_prop_self_intersection(steps.back());
  r.json["self_intersection"] = {{"volume", si.volume.to_string()},
                                 {"socle", si.socle.to_string()},
                                 {"normalization", si.normalization()},
                                 {"spot_volume", rat_to_json(si.spot_volume)},
                                 {"spot_polynomial", rat_to_json(si.spot_polynomial)}};
  bool si_ok = (si.equal != si.factorial) && si.spot_volume == si.spot_polynomial;
  r.passed = r.passed && si_ok;

  bool ode = check_ode(tower_truncation(4, TowerOptions{}.reference));
  r.json["second_order_ode_last_step"] = ode;
  r.passed = r.passed && ode;
  r.json["passed"] = r.passed;
  r.json["polytope"] = polytope_to_json(steps.back().explicit_family);
  return r;
}

Report figures_report() {
  Report r;
  Json figs = Json::array();
  for (const auto& f : {figure_triangle(), figure_trapezoid()}) {
    Json files = Json::object();
    for (const auto& [name, body] : f.files) files[name] = body;
    Json checks = Json::object();
    for (const auto& [name, ok] : f.checks) {
      checks[name] = ok;
      r.passed = r.passed && ok;
    }
    figs.push_back({{"name", f.name}, {"files", files}, {"checks", checks}});
    if (!r.json.contains("polytope")) r.json["polytope"] = polytope_to_json(numeric_family(f.delta.h_rep()));
  }
  r.json["figures"] = figs;
  return r;
}

}  // namespace pushpull
