#include "pushpull/pushpull.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pushpull {

RatVec TruncationSpec::hat_point() const {
  if (shift.size() != base.params.size()) throw std::invalid_argument("truncation: shift has wrong length");
  RatVec x = base.reference;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += shift[i];
  return x;
}

RatVec TruncationSpec::psi(std::size_t i) const {
  const CutFace& f = faces.at(i);
  if (f.psi) return *f.psi;
  RatVec v = base.ineqs.at(f.facet_a).normal;
  const RatVec& w = base.ineqs.at(f.facet_b).normal;
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[k];
  return v;
}

std::vector<std::string> used_in_order(const MPoly& p, const std::vector<std::string>& order) {
  auto used = p.used_vars();
  std::vector<std::string> out;
  for (const auto& v : order) {
    if (std::find(used.begin(), used.end(), v) != used.end()) out.push_back(v);
  }
  return out;
}

namespace {

bool tight(const Inequality& q, const RatVec& x, const RatVec& params) { return dot(q.normal, x) == q.offset.evaluate(params); }

std::vector<std::string> with_s(const TruncationSpec& spec) {
  auto vars = spec.base.params;
  vars.push_back(spec.s_name);
  return vars;
}

// Offset form f(x) re-expressed as f(x + s*shift) - s*extra over params + [s].
AffineForm moving(const AffineForm& f, const RatVec& shift, const Rat& extra) {
  AffineForm g = extend_form(f, f.coeffs.size() + 1);
  g.coeffs.back() = f.linear(shift) - extra;
  return g;
}

// Shifts a polynomial over base params + [s] along x -> x + s*shift.
MPoly shift_along(const MPoly& p, const TruncationSpec& spec) {
  const auto vars = with_s(spec);
  MPoly e = p.with_vars(vars);
  std::vector<MPoly> images;
  MPoly s = MPoly::variable(vars, vars.size() - 1);
  for (std::size_t k = 0; k + 1 < vars.size(); ++k) images.push_back(MPoly::variable(vars, k) + s * spec.shift[k]);
  images.push_back(s);
  return e.substitute(images);
}

}  // namespace

AffineForm face_level(const TruncationSpec& spec, std::size_t i) {
  const CutFace& f = spec.faces.at(i);
  RatVec psi = spec.psi(i);
  VertexChart chart = vertex_chart(spec.base, spec.hat_point());
  for (const auto& v : chart.vertices) {
    bool on_a = std::binary_search(v.active.begin(), v.active.end(), f.facet_a);
    bool on_b = std::binary_search(v.active.begin(), v.active.end(), f.facet_b);
    if (!on_a || !on_b) continue;
    AffineForm level = AffineForm::zero(spec.base.params.size());
    for (std::size_t k = 0; k < psi.size(); ++k) {
      if (psi[k] != 0) level += v.coords[k] * psi[k];
    }
    return level;
  }
  throw std::domain_error("face " + std::to_string(i) + " has no vertex");
}

std::vector<std::string> validate_truncation(const TruncationSpec& spec) {
  std::vector<std::string> problems;
  const ParamPolytope& base = spec.base;
  try {
    base.validate();
  } catch (const std::exception& e) {
    return {e.what()};
  }
  const std::size_t n = base.dim;
  if (base.reference.size() != base.params.size()) return {"base family has no reference point"};
  if (spec.shift.size() != base.params.size()) return {"shift has wrong length"};
  if (std::find(base.params.begin(), base.params.end(), spec.s_name) != base.params.end()) {
    return {"family parameter name '" + spec.s_name + "' clashes with a base parameter"};
  }
  for (std::size_t i = 0; i < spec.faces.size(); ++i) {
    const auto& f = spec.faces[i];
    if (f.facet_a >= base.ineqs.size() || f.facet_b >= base.ineqs.size() || f.facet_a == f.facet_b) {
      return {"face " + std::to_string(i) + ": invalid facet indices"};
    }
    if (f.psi && f.psi->size() != n) return {"face " + std::to_string(i) + ": cut normal has wrong length"};
    if (f.depth <= 0) problems.push_back("face " + std::to_string(i) + ": depth must be positive");
  }

  const RatVec hat = spec.hat_point();
  Polytope p, phat;
  try {
    p = Polytope::from_h(base.instantiate(base.reference));
    phat = Polytope::from_h(base.instantiate(hat));
  } catch (const std::exception& e) {
    return {std::string("base family: ") + e.what()};
  }
  if (!p.full_dimensional() || !phat.full_dimensional()) return {"base family is not full-dimensional"};
  if (normal_fan(p) != normal_fan(phat)) {
    problems.push_back("shifted polytope is not analogous to the base: " + describe_difference(normal_fan(p), normal_fan(phat)));
  }
  VertexChart chart = vertex_chart(base, hat);
  for (const auto& s : chart.inconsistencies) problems.push_back("vertex chart: " + s);
  if (!problems.empty()) return problems;

  std::vector<Rat> levels(spec.faces.size());
  std::vector<bool> on_some_face(phat.vertices().size(), false);
  for (std::size_t i = 0; i < spec.faces.size(); ++i) {
    const auto& f = spec.faces[i];
    RatVec psi = spec.psi(i);
    std::vector<RatVec> face_pts;
    for (std::size_t v = 0; v < phat.vertices().size(); ++v) {
      const RatVec& x = phat.vertices()[v];
      if (tight(base.ineqs[f.facet_a], x, hat) && tight(base.ineqs[f.facet_b], x, hat)) {
        face_pts.push_back(x);
        on_some_face[v] = true;
      }
    }
    if (affine_dimension(face_pts) != static_cast<int>(n) - 2) {
      problems.push_back("face " + std::to_string(i) + " is not of codimension two");
      continue;
    }
    levels[i] = dot(psi, face_pts.front());
    for (const auto& x : phat.vertices()) {
      bool on_face = std::find(face_pts.begin(), face_pts.end(), x) != face_pts.end();
      Rat val = dot(psi, x);
      if (on_face && val != levels[i]) problems.push_back("face " + std::to_string(i) + ": cut normal is not constant on the face");
      if (!on_face && val >= levels[i]) {
        problems.push_back("face " + std::to_string(i) + ": cut normal is not maximized only on the face (vertex " + to_string(x) + ")");
      }
    }
  }
  if (!problems.empty()) return problems;
  for (std::size_t v = 0; v < phat.vertices().size(); ++v) {
    if (on_some_face[v]) continue;
    for (std::size_t i = 0; i < spec.faces.size(); ++i) {
      if (dot(spec.psi(i), phat.vertices()[v]) >= levels[i] - spec.faces[i].depth) {
        problems.push_back("cut " + std::to_string(i) + " is too deep: it removes vertex " + to_string(phat.vertices()[v]));
      }
    }
  }
  if (!problems.empty()) return problems;
  std::vector<std::size_t> redundant;
  ParamPolytope q = build_truncation(spec);
  Polytope::from_h(q.instantiate(q.reference), &redundant);
  for (auto r : redundant) {
    if (r >= base.ineqs.size()) problems.push_back("cut " + std::to_string(r - base.ineqs.size()) + " does not support a facet");
  }
  return problems;
}

ParamPolytope build_truncation(const TruncationSpec& spec) {
  ParamPolytope q;
  q.dim = spec.base.dim;
  q.params = spec.base.params;
  q.reference = spec.base.reference;
  for (const auto& ineq : spec.base.ineqs) {
    Inequality moved = ineq;
    moved.offset.constant += ineq.offset.linear(spec.shift);
    q.ineqs.push_back(std::move(moved));
  }
  for (std::size_t i = 0; i < spec.faces.size(); ++i) {
    AffineForm level = face_level(spec, i);
    level.constant += level.linear(spec.shift) - spec.faces[i].depth;
    q.ineqs.push_back({spec.psi(i), level});
  }
  return q;
}

ParamPolytope truncation_family(const TruncationSpec& spec) {
  ParamPolytope t;
  t.dim = spec.base.dim;
  t.params = with_s(spec);
  t.reference = spec.hat_point();
  t.reference.push_back(Rat(1));
  const std::size_t np = t.params.size();
  for (const auto& ineq : spec.base.ineqs) t.ineqs.push_back({ineq.normal, extend_form(ineq.offset, np)});
  for (std::size_t i = 0; i < spec.faces.size(); ++i) {
    AffineForm level = extend_form(face_level(spec, i), np);
    level.coeffs.back() = -spec.faces[i].depth;
    t.ineqs.push_back({spec.psi(i), level});
  }
  return t;
}

QPolynomialData extract_q_data(const TruncationSpec& spec) {
  QPolynomialData out;
  out.vars = with_s(spec);
  const std::size_t s_idx = out.vars.size() - 1;
  MPoly vol_p = volume_polynomial(spec.base, spec.hat_point()).with_vars(out.vars);
  if (spec.faces.empty()) {
    out.q = MPoly(out.vars);
  } else {
    out.q = vol_p - volume_polynomial(truncation_family(spec));
  }
  if (!out.q.coefficient_of_power(s_idx, 0).is_zero() || !out.q.coefficient_of_power(s_idx, 1).is_zero()) {
    throw std::domain_error("cut-off volume has terms of degree < 2 in " + spec.s_name + ": " + out.q.to_string());
  }
  const int n = std::max(static_cast<int>(spec.base.dim), 2);
  for (int j = 0; j <= n; ++j) out.g.push_back(out.q.coefficient_of_power(s_idx, j).with_vars(spec.base.params));
  out.vol_f = out.g[2] * Rat(2);
  return out;
}

ParamPolytope build_pushpull_family(const TruncationSpec& spec) {
  const std::size_t n = spec.base.dim;
  const auto params = with_s(spec);
  const std::size_t np = params.size();
  RatVec ref = spec.base.reference;
  ref.push_back(Rat(1));

  std::vector<std::vector<AffineForm>> points;
  for (const auto& v : vertex_chart(spec.base, spec.base.reference).vertices) {
    std::vector<AffineForm> pt;
    for (const auto& c : v.coords) pt.push_back(extend_form(c, np));
    pt.push_back(AffineForm::param(np, np - 1));
    points.push_back(std::move(pt));
  }

  ParamPolytope bottom;
  bottom.dim = n;
  bottom.params = params;
  bottom.reference = ref;
  for (const auto& ineq : spec.base.ineqs) bottom.ineqs.push_back({ineq.normal, moving(ineq.offset, spec.shift, 0)});
  for (std::size_t i = 0; i < spec.faces.size(); ++i) {
    bottom.ineqs.push_back({spec.psi(i), moving(face_level(spec, i), spec.shift, spec.faces[i].depth)});
  }
  VertexChart chart = vertex_chart(bottom, ref);
  if (!chart.consistent()) throw std::domain_error("bottom layer: " + chart.inconsistencies.front());
  for (const auto& v : chart.vertices) {
    std::vector<AffineForm> pt = v.coords;
    pt.push_back(AffineForm::zero(np));
    points.push_back(std::move(pt));
  }
  return family_hull(n + 1, params, points, ref);
}

Rat cut_off_volume(const TruncationSpec& spec) {
  const RatVec hat = spec.hat_point();
  HPolytope h = spec.base.instantiate(hat);
  const std::size_t k = spec.faces.size();
  std::vector<Rat> cut_levels;
  for (std::size_t i = 0; i < k; ++i) cut_levels.push_back(face_level(spec, i).evaluate(hat) - spec.faces[i].depth);
  Rat total = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    HPolytope piece = h;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      ++bits;
      RatVec neg = spec.psi(i);
      for (auto& x : neg) x = -x;
      piece.normals.push_back(neg);
      piece.offsets.push_back(-cut_levels[i]);
    }
    Rat v = 0;
    try {
      v = volume(Polytope::from_h(piece)).value;
    } catch (const std::domain_error&) {
      v = 0;  // empty intersection
    }
    total += (bits % 2 == 1) ? v : -v;
  }
  return total;
}

MPoly shift_operator(const TruncationSpec& spec, const std::vector<std::string>& vars) {
  MPoly c1(vars);
  for (std::size_t k = 0; k < spec.shift.size(); ++k) {
    if (spec.shift[k] == 0) continue;
    auto it = std::find(vars.begin(), vars.end(), spec.base.params[k]);
    if (it == vars.end()) continue;
    c1 += MPoly::variable(vars, static_cast<std::size_t>(it - vars.begin())) * spec.shift[k];
  }
  return c1;
}

MPoly second_order_operator(const MPoly& f, const std::string& s_name, const MPoly& c1, const MPoly& c2) {
  const auto& vars = f.vars();
  MPoly s = MPoly::variable(vars, s_name);
  MPoly op = s * s - c1.with_vars(vars) * s + c2.with_vars(vars);
  return apply_operator(op, f);
}

bool check_star_star(const TruncationSpec& spec, const QPolynomialData& qdata, const MPoly& c1, const MPoly& c2) {
  MPoly shifted_q = shift_along(qdata.q, spec);
  MPoly shifted_f = shift_along(qdata.vol_f, spec);
  return second_order_operator(shifted_q, spec.s_name, c1, c2) == shifted_f;
}

namespace {

struct Candidate {
  MPoly op;  // over the ring variables of the base
  std::string label;
};

struct Analysis {
  MPoly vol_base;                // over base params
  std::vector<std::string> ring_vars;
  KhpRing ring;
  QPolynomialData qdata;
  MPoly vol_f_ring;              // vol_F over ring vars (if expressible)
  bool vol_f_expressible = true;
  OperatorSolutions df;
  std::vector<Candidate> candidates;
};

// Re-expresses p over vars if it only uses them.
std::optional<MPoly> restrict_to(const MPoly& p, const std::vector<std::string>& vars) {
  for (const auto& v : p.used_vars()) {
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) return std::nullopt;
  }
  return p.with_vars(vars);
}

Analysis analyze(const TruncationSpec& spec) {
  Analysis a;
  a.vol_base = volume_polynomial(spec.base, spec.base.reference);
  a.ring_vars = used_in_order(a.vol_base, spec.base.params);
  a.ring = build_ring(a.vol_base.with_vars(a.ring_vars));
  a.qdata = extract_q_data(spec);
  auto vf = restrict_to(a.qdata.vol_f, a.ring_vars);
  a.vol_f_expressible = vf.has_value();
  a.vol_f_ring = vf ? *vf : MPoly(a.ring_vars);
  if (a.vol_f_expressible) a.df = solve_for_operator(a.ring, a.vol_f_ring, 2);
  if (a.df.particular) a.candidates.push_back({*a.df.particular, "particular"});
  for (std::size_t h = 0; h < spec.c2_hints.size(); ++h) {
    auto op = restrict_to(spec.c2_hints[h], a.ring_vars);
    if (op && a.vol_f_expressible && apply_operator(*op, a.ring.vol) == a.vol_f_ring) {
      a.candidates.push_back({*op, "hint " + std::to_string(h)});
    }
  }
  if (a.df.particular) {
    for (std::size_t k = 0; k < a.df.kernel.size(); ++k) {
      a.candidates.push_back({*a.df.particular + a.df.kernel[k], "particular + kernel[" + std::to_string(k) + "]"});
    }
  }
  return a;
}

MPoly relation_operator(const std::vector<std::string>& vars, const std::string& s_name, const MPoly& c1, const MPoly& c2) {
  MPoly s = MPoly::variable(vars, s_name);
  return s * s - c1.with_vars(vars) * s + c2.with_vars(vars);
}

}  // namespace

bool VerificationReport::passed() const {
  if (!problems.empty() || checks.size() != 5) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerificationReport verify_theorem_main(const TruncationSpec& spec, bool fail_fast) {
  VerificationReport rep;
  rep.problems = validate_truncation(spec);
  if (!rep.problems.empty()) return rep;

  Analysis a;
  try {
    a = analyze(spec);
  } catch (const std::domain_error& e) {
    rep.problems.push_back(e.what());
    return rep;
  }
  rep.base_vars = a.ring_vars;
  rep.vol_base = a.ring.vol;
  rep.qdata = a.qdata;
  rep.hilbert_base = a.ring.hilbert;
  ParamPolytope family = build_pushpull_family(spec);
  MPoly vol_delta_full = volume_polynomial(family);
  const auto full_vars = with_s(spec);
  MPoly c1_full = shift_operator(spec, spec.base.params);
  MPoly c1_ring = shift_operator(spec, a.ring_vars);
  rep.c1 = operator_text(c1_ring);

  auto done = [&](const CheckResult& c) {
    rep.checks.push_back(c);
    return fail_fast && !c.passed;
  };

  // (i) operators for vol_F and every g_j
  {
    CheckResult c{"operators_exist", true, ""};
    if (!a.vol_f_expressible || !a.df.solvable()) {
      c.passed = false;
      c.detail = "no degree-2 operator maps the base volume to vol_F = " + a.qdata.vol_f.to_string();
    }
    for (std::size_t j = 3; j < a.qdata.g.size() && c.passed; ++j) {
      if (a.qdata.g[j].is_zero()) continue;
      auto gj = restrict_to(a.qdata.g[j], a.ring_vars);
      if (!gj || !solve_for_operator(a.ring, *gj, static_cast<int>(j)).solvable()) {
        c.passed = false;
        c.detail = "no degree-" + std::to_string(j) + " operator maps the base volume to g = " + a.qdata.g[j].to_string();
      }
    }
    if (c.passed) c.detail = "vol_F = " + (a.vol_f_ring.is_zero() ? std::string("0") : a.vol_f_ring.to_string());
    if (done(c)) return rep;
  }

  // (ii) condition on q, first candidate that works
  std::optional<Candidate> chosen;
  {
    CheckResult c{"condition_on_q", false, ""};
    for (const auto& cand : a.candidates) {
      if (check_star_star(spec, a.qdata, c1_full, cand.op.with_vars(spec.base.params))) {
        chosen = cand;
        break;
      }
    }
    if (chosen) {
      c.passed = true;
      c.detail = "c2 = " + operator_text(chosen->op) + " (" + chosen->label + ")";
    } else {
      c.detail = a.candidates.empty() ? "no candidate for c2" : "fails for all " + std::to_string(a.candidates.size()) + " candidates";
    }
    if (done(c)) return rep;
  }
  MPoly c2 = chosen ? chosen->op : (a.candidates.empty() ? MPoly(a.ring_vars) : a.candidates.front().op);
  rep.c2 = operator_text(c2);
  rep.c2_choice = chosen ? chosen->label : "";

  // (iii) the quadratic relation in d_s kills vol_Delta
  {
    CheckResult c{"projective_relation", false, ""};
    MPoly residue = second_order_operator(vol_delta_full, spec.s_name, c1_full, c2.with_vars(spec.base.params));
    c.passed = residue.is_zero();
    c.detail = c.passed ? "annihilates vol_Delta" : "residue " + residue.to_string();
    if (done(c)) return rep;
  }

  // (iv) relations of the base lift
  {
    CheckResult c{"base_relations_lift", true, ""};
    std::size_t count = 0;
    auto test = [&](const MPoly& k) {
      if (!c.passed) return;
      ++count;
      MPoly r = apply_operator(k.with_vars(full_vars), vol_delta_full);
      if (!r.is_zero()) {
        c.passed = false;
        c.detail = "relation " + operator_text(k) + " of the base does not annihilate vol_Delta";
      }
    };
    for (const auto& degree : a.ring.annihilator) {
      for (const auto& k : degree) test(k);
    }
    for (const auto& k : a.ring.generators.back()) test(k);
    if (c.passed) c.detail = std::to_string(count) + " relations checked";
    if (done(c)) return rep;
  }

  // (v) Hilbert function doubles as (1+t) h_base
  {
    CheckResult c{"hilbert_doubling", false, ""};
    std::vector<std::string> dvars;
    auto used = vol_delta_full.used_vars();
    for (const auto& v : spec.base.params) {
      bool in_ring = std::find(a.ring_vars.begin(), a.ring_vars.end(), v) != a.ring_vars.end();
      bool in_delta = std::find(used.begin(), used.end(), v) != used.end();
      if (in_ring || in_delta) dvars.push_back(v);
    }
    dvars.push_back(spec.s_name);
    KhpRing rd = build_ring(vol_delta_full.with_vars(dvars));
    rep.vol_delta = rd.vol;
    rep.hilbert_delta = rd.hilbert;
    std::vector<std::size_t> expect(a.ring.hilbert.size() + 1, 0);
    for (std::size_t d = 0; d < a.ring.hilbert.size(); ++d) {
      expect[d] += a.ring.hilbert[d];
      expect[d + 1] += a.ring.hilbert[d];
    }
    c.passed = rd.hilbert == expect;
    auto str = [](const std::vector<std::size_t>& h) {
      std::string s = "(";
      for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
      return s + ")";
    };
    c.detail = "got " + str(rd.hilbert) + ", expected " + str(expect);
    rep.relation = operator_text(relation_operator(dvars, spec.s_name, c1_ring, c2));
    done(c);
  }
  return rep;
}

bool check_ode(const TruncationSpec& spec) {
  Analysis a = analyze(spec);
  MPoly vol_delta = volume_polynomial(build_pushpull_family(spec));
  MPoly c1 = shift_operator(spec, spec.base.params);
  return std::any_of(a.candidates.begin(), a.candidates.end(), [&](const Candidate& cand) {
    return second_order_operator(vol_delta, spec.s_name, c1, cand.op.with_vars(spec.base.params)).is_zero();
  });
}

}  // namespace pushpull
