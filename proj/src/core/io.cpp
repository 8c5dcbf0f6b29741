#include "pushpull/io.hpp"

#include <algorithm>

namespace pushpull {

namespace {

std::vector<std::string> coordinate_names(std::size_t dim) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("u" + std::to_string(i + 1));
  return out;
}

const Json& body_of(const Json& j) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  if (j.contains("polytope")) {
    if (!j["polytope"].is_object()) throw InputError("\"polytope\" must be an object");
    return j["polytope"];
  }
  return j;
}

std::vector<std::string> strings_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json sizes_to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

}  // namespace

Rat rat_from_json(const Json& j) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("expected an integer or a rational string, got " + j.dump());
}

Json rat_to_json(const Rat& r) { return to_string(r); }

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals, got " + j.dump());
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json ratvec_to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

RatMat ratmat_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rows, got " + j.dump());
  RatMat m;
  for (const auto& row : j) m.push_back(ratvec_from_json(row));
  return m;
}

Json ratmat_to_json(const RatMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(ratvec_to_json(row));
  return a;
}

AffineForm affine_from_json(const Json& j, const std::vector<std::string>& params) {
  if (j.is_number_integer()) return AffineForm::constant_form(params.size(), rat_from_json(j));
  if (j.is_object()) {
    std::vector<std::pair<std::string, Rat>> terms;
    for (const auto& [k, v] : j.items()) {
      if (k != "const" && std::find(params.begin(), params.end(), k) == params.end()) {
        throw InputError("offset uses unknown parameter '" + k + "'");
      }
      terms.emplace_back(k, rat_from_json(v));
    }
    return affine_from_terms(params, terms);
  }
  if (!j.is_string()) throw InputError("offset must be a number, an expression or an object, got " + j.dump());
  MPoly p;
  try {
    p = MPoly::parse(j.get<std::string>(), params);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (p.total_degree() > 1) throw InputError("offset '" + j.get<std::string>() + "' is not affine");
  AffineForm f = AffineForm::zero(params.size());
  for (const auto& [e, c] : p.terms()) {
    auto it = std::find(e.begin(), e.end(), 1);
    if (it == e.end()) {
      f.constant += c;
    } else {
      f.coeffs[static_cast<std::size_t>(it - e.begin())] += c;
    }
  }
  return f;
}

ParamPolytope polytope_from_json(const Json& j) {
  const Json& b = body_of(j);
  ParamPolytope p;
  if (b.contains("points")) {
    if (!b.contains("dim")) throw InputError("a point list needs \"dim\"");
    const std::size_t dim = b["dim"].get<std::size_t>();
    std::vector<RatVec> pts;
    for (const auto& row : b["points"]) {
      pts.push_back(ratvec_from_json(row));
      if (pts.back().size() != dim) throw InputError("point " + row.dump() + " does not have dim coordinates");
    }
    if (pts.empty()) throw InputError("empty point list");
    Polytope hull = Polytope::from_points(dim, pts);
    if (!hull.full_dimensional()) throw InputError("points do not span a full-dimensional polytope");
    p.dim = dim;
    for (const auto& f : hull.facets()) p.ineqs.push_back({f.normal, AffineForm::constant_form(0, f.offset)});
    return p;
  }
  if (!b.contains("dim") || !b.contains("inequalities")) throw InputError("polytope needs \"dim\" and \"inequalities\"");
  if (!b["dim"].is_number_unsigned()) throw InputError("\"dim\" must be a non-negative integer");
  p.dim = b["dim"].get<std::size_t>();
  if (b.contains("params")) p.params = strings_from_json(b["params"], "\"params\"");
  if (b.contains("reference")) p.reference = ratvec_from_json(b["reference"]);
  else if (p.params.empty()) p.reference = {};
  else throw InputError("a family with parameters needs \"reference\"");
  if (!b["inequalities"].is_array()) throw InputError("\"inequalities\" must be an array");
  for (const auto& q : b["inequalities"]) {
    if (!q.is_object() || !q.contains("normal") || !q.contains("offset")) {
      throw InputError("inequality needs \"normal\" and \"offset\": " + q.dump());
    }
    p.ineqs.push_back({ratvec_from_json(q["normal"]), affine_from_json(q["offset"], p.params)});
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return p;
}

Json polytope_to_json(const ParamPolytope& p) {
  Json j;
  j["dim"] = p.dim;
  j["params"] = p.params;
  j["reference"] = ratvec_to_json(p.reference);
  Json ineqs = Json::array();
  const auto coords = coordinate_names(p.dim);
  for (const auto& q : p.ineqs) {
    ineqs.push_back({{"normal", ratvec_to_json(q.normal)},
                     {"offset", q.offset.to_string(p.params)},
                     {"text", inequality_string(q, p.params, coords)}});
  }
  j["inequalities"] = ineqs;
  return j;
}

Json geometry_to_json(const ParamPolytope& p) {
  Json j;
  try {
    Polytope poly = Polytope::from_h(p.at_reference());
    j["dim"] = poly.dim();
    Json verts = Json::array();
    for (const auto& v : poly.vertices()) verts.push_back(ratvec_to_json(v));
    j["vertices"] = verts;
    if (poly.full_dimensional()) {
      Json f = Json::array();
      for (auto x : face_lattice(poly).f_vector()) f.push_back(x);
      j["f_vector"] = f;
    }
  } catch (const std::domain_error& e) {
    j["error"] = e.what();
  }
  return j;
}

TruncationSpec truncation_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("truncation spec must be an object");
  if (!j.contains("base") || !j.contains("shift")) throw InputError("truncation spec needs \"base\" and \"shift\"");
  TruncationSpec t;
  t.base = polytope_from_json(j["base"]);
  t.shift = ratvec_from_json(j["shift"]);
  if (t.shift.size() != t.base.params.size()) throw InputError("\"shift\" must have one entry per base parameter");
  if (j.contains("s")) t.s_name = j["s"].get<std::string>();
  if (std::find(t.base.params.begin(), t.base.params.end(), t.s_name) != t.base.params.end()) {
    throw InputError("the new parameter '" + t.s_name + "' clashes with a base parameter");
  }
  if (j.contains("faces")) {
    for (const auto& f : j["faces"]) {
      if (!f.contains("facets") || !f["facets"].is_array() || f["facets"].size() != 2) {
        throw InputError("each face needs \"facets\": [i, j]");
      }
      CutFace c;
      c.facet_a = f["facets"][0].get<std::size_t>();
      c.facet_b = f["facets"][1].get<std::size_t>();
      if (f.contains("psi")) c.psi = ratvec_from_json(f["psi"]);
      if (f.contains("depth")) c.depth = rat_from_json(f["depth"]);
      t.faces.push_back(c);
    }
  }
  if (j.contains("c2_hints")) {
    for (const auto& h : j["c2_hints"]) {
      try {
        t.c2_hints.push_back(MPoly::parse(h.get<std::string>(), t.base.params));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
  }
  return t;
}

Json truncation_to_json(const TruncationSpec& t) {
  Json j;
  j["base"] = polytope_to_json(t.base);
  j["shift"] = ratvec_to_json(t.shift);
  j["s"] = t.s_name;
  Json faces = Json::array();
  for (const auto& f : t.faces) {
    Json fj{{"facets", {f.facet_a, f.facet_b}}, {"depth", rat_to_json(f.depth)}};
    if (f.psi) fj["psi"] = ratvec_to_json(*f.psi);
    faces.push_back(fj);
  }
  j["faces"] = faces;
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j;
  j["passed"] = r.passed();
  if (!r.problems.empty()) {
    j["problems"] = r.problems;
    return j;
  }
  j["base_vars"] = r.base_vars;
  j["vol_base"] = r.vol_base.to_string();
  j["vol_delta"] = r.vol_delta.to_string();
  j["q"] = r.qdata.q.to_string();
  j["vol_f"] = r.qdata.vol_f.to_string();
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["c2_choice"] = r.c2_choice;
  j["relation"] = r.relation;
  j["hilbert_base"] = sizes_to_json(r.hilbert_base);
  j["hilbert_delta"] = sizes_to_json(r.hilbert_delta);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  return j;
}

Json ring_to_json(const KhpRing& ring, int max_degree) {
  Json j;
  j["vars"] = ring.vars();
  j["volume"] = ring.vol.to_string();
  j["hilbert"] = sizes_to_json(ring.hilbert);
  j["total_rank"] = ring.total_rank();
  j["gorenstein"] = ring.gorenstein;
  j["presentation"] = presentation(ring);
  Json gens = Json::array();
  for (std::size_t d = 0; d < ring.generators.size(); ++d) {
    if (max_degree >= 0 && static_cast<int>(d) > max_degree) break;
    for (const auto& g : ring.generators[d]) gens.push_back({{"degree", d}, {"relation", operator_text(g)}});
  }
  j["generators"] = gens;
  j["generators_complete"] = ring.generators_complete && (max_degree < 0 || max_degree > ring.top);
  Json basis = Json::array();
  for (const auto& deg : ring.basis) {
    Json row = Json::array();
    for (const auto& m : deg) row.push_back(operator_text(m));
    basis.push_back(row);
  }
  j["basis"] = basis;
  return j;
}

GkInput gk_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("gk input must be an object");
  GkInput in;
  if (j.contains("betas")) {
    if (!j.contains("gram")) throw InputError("\"betas\" needs a \"gram\" matrix");
    in.betas.vectors = ratmat_from_json(j["betas"]);
    in.betas.gram = ratmat_from_json(j["gram"]);
    if (!j.contains("lambda")) throw InputError("explicit betas need \"lambda\"");
    in.lambda = ratvec_from_json(j["lambda"]);
  } else {
    if (j.value("type", std::string("A")) != "A") throw InputError("only type A root data are built in");
    if (!j.contains("rank") || !j.contains("word")) throw InputError("root datum input needs \"rank\" and \"word\"");
    RootDatum d = type_a(j["rank"].get<std::size_t>());
    in.word = j["word"].get<std::vector<int>>();
    try {
      in.betas = betas_from_word(d, *in.word);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    in.lambda = j.contains("lambda") ? ratvec_from_json(j["lambda"]) : d.rho;
  }
  try {
    in.betas.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (in.lambda.size() != in.betas.ambient()) throw InputError("\"lambda\" has the wrong length");
  return in;
}

Json tower_step_to_json(const TowerStep& s) {
  Json j;
  j["word"] = s.word_prefix;
  j["polytope"] = polytope_to_json(s.explicit_family);
  j["redundant"] = sizes_to_json(s.redundant);
  j["volume"] = s.volume.to_string();
  j["hilbert"] = sizes_to_json(s.hilbert);
  Json rel = Json::array();
  for (const auto& r : s.relations) rel.push_back(operator_text(r));
  j["relations"] = rel;
  Json dict = Json::object();
  for (std::size_t i = 0; i < s.dictionary.size(); ++i) dict["xi" + std::to_string(i + 1)] = operator_text(s.dictionary[i]);
  j["dictionary"] = dict;
  Json checks = Json::array();
  for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  j["passed"] = s.passed();
  return j;
}

}  // namespace pushpull
