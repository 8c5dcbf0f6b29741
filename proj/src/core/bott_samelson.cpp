#include "pushpull/bott_samelson.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace pushpull {

namespace {

const std::vector<std::string> kParams = {"a", "b", "c", "d", "e"};
const std::vector<std::string> kXi = {"xi1", "xi2", "xi3", "xi4", "xi5"};

std::vector<std::string> first(const std::vector<std::string>& names, std::size_t k) {
  return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::string join(const std::vector<std::size_t>& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s + ")";
}

std::vector<std::size_t> binomial_row(std::size_t k) {
  std::vector<std::size_t> row{1};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::size_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

// Inequality sum_{k in coords} u_k <= sum of named parameters (coeff 1 unless given).
struct Row {
  std::vector<std::pair<std::size_t, int>> lhs;  // 1-based coordinate, coefficient
  std::vector<std::pair<std::string, int>> rhs;
};

ParamPolytope family_from_rows(std::size_t dim, std::size_t nparams, const std::vector<Row>& rows,
                               const RatVec& reference) {
  ParamPolytope p;
  p.dim = dim;
  p.params = first(kParams, nparams);
  p.reference = RatVec(reference.begin(), reference.begin() + static_cast<std::ptrdiff_t>(nparams));
  for (const auto& r : rows) {
    RatVec normal(dim);
    for (const auto& [k, c] : r.lhs) normal[k - 1] = c;
    std::vector<std::pair<std::string, Rat>> terms;
    for (const auto& [name, c] : r.rhs) terms.emplace_back(name, Rat(c));
    p.ineqs.push_back({normal, affine_from_terms(p.params, terms)});
  }
  return p;
}

Row nonneg(std::size_t k) { return {{{k, -1}}, {}}; }

Row bound(std::vector<std::size_t> coords, std::vector<std::string> names, int last_weight = 1) {
  Row r;
  for (std::size_t i = 0; i < coords.size(); ++i) r.lhs.emplace_back(coords[i], i + 1 == coords.size() ? last_weight : 1);
  for (std::size_t i = 0; i < names.size(); ++i) r.rhs.emplace_back(names[i], i + 1 == names.size() ? last_weight : 1);
  return r;
}

MPoly d(std::size_t k, std::size_t i) { return MPoly::variable(first(kParams, k), i); }
MPoly xi(std::size_t k, std::size_t i) { return MPoly::variable(first(kXi, k), i); }

}  // namespace

std::size_t fflv_index(std::size_t i, std::size_t j) {
  if (i < 1 || i >= j) throw std::invalid_argument("fflv_index: need 1 <= i < j");
  return (j - 1) * (j - 2) / 2 + i;
}

std::string fflv_table(std::size_t n) {
  std::ostringstream out;
  for (std::size_t row = 0; row < n; ++row) {
    // row 0 holds the lambdas, row r >= 1 the roots (i, i+r)
    std::vector<std::string> cells;
    for (std::size_t col = n; col >= 1; --col) {
      if (row == 0) {
        cells.push_back("l" + std::to_string(col));
      } else if (col > row) {
        cells.push_back("u" + std::to_string(fflv_index(col - row, col)));
      }
    }
    out << std::string(3 * row, ' ');
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "    " : "") << cells[c];
    out << "\n";
  }
  return out.str();
}

std::vector<std::vector<std::size_t>> dyck_paths(std::size_t n, std::size_t i, std::size_t j) {
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("dyck_paths: need 1 <= i < j <= n");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t p, std::size_t q) {
    path.push_back(fflv_index(p, q));
    if (p == j - 1 && q == j) {
      auto sorted = path;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(sorted);
    } else {
      if (q + 1 <= j) walk(p, q + 1);
      if (p + 1 < q && p + 1 <= j - 1) walk(p + 1, q);
    }
    path.pop_back();
  };
  walk(i, i + 1);
  std::sort(out.begin(), out.end());
  return out;
}

ParamPolytope fflv_polytope(const std::vector<AffineForm>& lambdas, const std::vector<std::string>& params,
                            const RatVec& reference) {
  const std::size_t n = lambdas.size();
  if (n < 2) throw std::invalid_argument("fflv_polytope: need at least two lambdas");
  if (reference.size() != params.size()) throw std::invalid_argument("fflv_polytope: reference arity mismatch");
  ParamPolytope p;
  p.dim = n * (n - 1) / 2;
  p.params = params;
  p.reference = reference;
  for (std::size_t k = 0; k < p.dim; ++k) {
    RatVec normal(p.dim);
    normal[k] = -1;
    p.ineqs.push_back({normal, AffineForm::zero(params.size())});
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      AffineForm gap = lambdas[j - 1] - lambdas[i - 1];
      if (gap.evaluate(reference) < 0) {
        throw std::domain_error("fflv_polytope: l" + std::to_string(j) + " - l" + std::to_string(i) + " is negative");
      }
      for (const auto& path : dyck_paths(n, i, j)) {
        RatVec normal(p.dim);
        for (auto k : path) normal[k - 1] = 1;
        p.ineqs.push_back({normal, gap});
      }
    }
  }
  return p;
}

ParamPolytope fflv_polytope(const RatVec& lambdas) {
  std::vector<AffineForm> forms;
  for (const auto& l : lambdas) forms.push_back(AffineForm::constant_form(0, l));
  return fflv_polytope(forms, {}, {});
}

std::vector<MPoly> projective_bundle_presentation(const std::vector<MPoly>& base_relations, const MPoly& c1,
                                                  const MPoly& c2, const std::string& new_var) {
  if (!c1.is_zero() && (!c1.is_homogeneous() || c1.total_degree() != 1)) {
    throw std::invalid_argument("projective_bundle_presentation: c1 must have degree 1");
  }
  if (!c2.is_zero() && (!c2.is_homogeneous() || c2.total_degree() != 2)) {
    throw std::invalid_argument("projective_bundle_presentation: c2 must have degree 2");
  }
  if (c1.has_var(new_var) && c1.degree_in(c1.var_index(new_var)) > 0) {
    throw std::invalid_argument("projective_bundle_presentation: c1 uses the new variable");
  }
  if (c2.has_var(new_var) && c2.degree_in(c2.var_index(new_var)) > 0) {
    throw std::invalid_argument("projective_bundle_presentation: c2 uses the new variable");
  }
  auto vars = c1.vars();
  if (std::find(vars.begin(), vars.end(), new_var) == vars.end()) vars.push_back(new_var);
  std::vector<MPoly> out;
  for (const auto& r : base_relations) out.push_back(r.with_vars(vars));
  MPoly x = MPoly::variable(vars, new_var);
  out.push_back(x * x - c1.with_vars(vars) * x + c2.with_vars(vars));
  return out;
}

MPoly translate(const MPoly& op, const std::vector<MPoly>& dictionary) {
  if (dictionary.size() != op.nvars()) throw std::invalid_argument("translate: dictionary arity mismatch");
  return op.substitute(dictionary);
}

// --------------------------------------------------------------------------

bool TowerStep::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const TowerCheck& c) { return c.passed; });
}

ParamPolytope tower_explicit(std::size_t step, const RatVec& reference) {
  if (reference.size() < step) throw std::invalid_argument("tower_explicit: reference too short");
  switch (step) {
    case 1:
      return family_from_rows(1, 1, {nonneg(1), bound({1}, {"a"})}, reference);
    case 2:
      return family_from_rows(2, 2, {nonneg(1), nonneg(2), bound({2}, {"b"}), bound({1, 2}, {"a", "b"})}, reference);
    case 3:
      return family_from_rows(3, 3,
                              {nonneg(1), bound({1}, {"a", "b"}), nonneg(3), bound({3}, {"c"}), nonneg(2),
                               bound({2, 3}, {"b", "c"}), bound({1, 2, 3}, {"a", "b", "c"})},
                              reference);
    case 4:
      return family_from_rows(4, 4,
                              {nonneg(1), nonneg(2), nonneg(3), nonneg(4), bound({3}, {"c"}), bound({4}, {"d"}),
                               bound({1, 4}, {"a", "b", "d"}), bound({2, 3, 4}, {"b", "c", "d"}),
                               bound({1, 2, 3, 4}, {"a", "b", "c", "d"})},
                              reference);
    case 5:
      return family_from_rows(5, 5,
                              {nonneg(1), nonneg(2), nonneg(3), nonneg(4), nonneg(5),
                               bound({1}, {"a", "b", "d"}), bound({5}, {"e"}), bound({3, 5}, {"c", "e"}),
                               bound({4, 5}, {"d", "e"}), bound({1, 4, 5}, {"a", "b", "d", "e"}),
                               bound({2, 3, 5}, {"b", "c", "d", "e"}), bound({2, 4, 5}, {"b", "c", "d", "e"}),
                               bound({1, 2, 3, 5}, {"a", "b", "c", "d", "e"}),
                               bound({1, 2, 4, 5}, {"a", "b", "c", "d", "e"}),
                               bound({2, 3, 4, 5}, {"b", "c", "d", "e"}, 2),
                               bound({1, 2, 3, 4, 5}, {"a", "b", "c", "d", "e"}, 2)},
                              reference);
    default:
      throw std::invalid_argument("tower_explicit: step must be 1..5");
  }
}

TruncationSpec tower_truncation(std::size_t step, const RatVec& reference) {
  TruncationSpec t;
  t.base = tower_explicit(step, reference);
  t.s_name = kParams.at(step);
  t.shift = RatVec(step);
  switch (step) {
    case 1:
      t.shift[0] = 1;
      break;
    case 2:
      t.shift[1] = 1;
      // facet u1+u2 <= a+b meets u2 >= 0
      t.faces.push_back({3, 1, std::nullopt, Rat(1)});
      break;
    case 3:
      t.shift[1] = 1;
      break;
    case 4: {
      t.shift[2] = 1;
      t.shift[3] = 1;
      // u1+u4, u2+u3+u4 and the total sum, each met with u3 >= 0 or u4 >= 0
      const std::vector<std::pair<std::size_t, std::size_t>> faces = {{6, 3}, {7, 2}, {7, 3}, {8, 2}, {8, 3}};
      for (const auto& [a, b] : faces) t.faces.push_back({a, b, std::nullopt, Rat(1)});
      MPoly dc = d(4, 2), dd = d(4, 3);
      t.c2_hints.push_back(dc * dc + dd * dd);
      break;
    }
    default:
      throw std::invalid_argument("tower_truncation: step must be 1..4");
  }
  return t;
}

std::vector<TowerStep> build_tower_12132(const TowerOptions& options) {
  const RatVec& ref = options.reference;
  if (ref.size() != 5) throw std::invalid_argument("build_tower_12132: reference needs five values");
  const std::vector<int> word = {1, 2, 1, 3, 2};

  // Chern-type data of each projective bundle, as (c1, c2) over xi_1..xi_k-1.
  auto bundle = [](std::size_t k) -> std::pair<MPoly, MPoly> {
    auto vars = first(kXi, k);
    MPoly zero(vars);
    auto x = [&](std::size_t i) { return MPoly::variable(vars, i - 1); };
    switch (k) {
      case 1: return {zero, zero};
      case 2: return {x(1), zero};
      case 3: return {-x(2), x(2) * x(2)};
      case 4: return {x(2), zero};
      default: return {x(3) + x(4) - x(2), x(3) * (x(4) - x(2))};
    }
  };
  auto image = [](std::size_t k, std::size_t i) {
    // xi_1 -> da, xi_2 -> db, xi_3 -> dc - db, xi_4 -> dd, xi_5 -> de - dd
    switch (i) {
      case 0: return d(k, 0);
      case 1: return d(k, 1);
      case 2: return d(k, 2) - d(k, 1);
      case 3: return d(k, 3);
      default: return d(k, 4) - d(k, 3);
    }
  };

  std::vector<TowerStep> steps;
  std::vector<MPoly> relations;
  for (std::size_t k = 1; k <= 5; ++k) {
    TowerStep st;
    st.word_prefix.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
    st.explicit_family = tower_explicit(k, ref);
    Polytope::from_h(st.explicit_family.at_reference(), &st.redundant);
    st.volume = volume_polynomial(st.explicit_family);

    auto [c1, c2] = bundle(k);
    relations = projective_bundle_presentation(relations, c1, c2, kXi[k - 1]);
    st.relations = relations;
    for (std::size_t i = 0; i < k; ++i) st.dictionary.push_back(image(k, i));

    const auto expect = binomial_row(k);
    st.hilbert = hilbert_function(st.volume);
    st.checks.push_back({"hilbert", st.hilbert == expect, "got " + join(st.hilbert) + ", expected " + join(expect)});

    {
      TowerCheck c{"relations_annihilate", true, std::to_string(relations.size()) + " relations"};
      for (const auto& r : relations) {
        MPoly op = translate(r, st.dictionary);
        if (!apply_operator(op, st.volume).is_zero()) {
          c.passed = false;
          c.detail = operator_text(r) + " -> " + operator_text(op) + " does not annihilate the volume";
          break;
        }
      }
      st.checks.push_back(c);
    }
    {
      QuotientRank qr = quotient_rank(relations, static_cast<int>(k) + 1);
      auto with_top = expect;
      with_top.push_back(0);
      bool ok = qr.hilbert == with_top && qr.total == (std::size_t{1} << k);
      st.checks.push_back({"presentation_rank", ok, "quotient Hilbert " + join(qr.hilbert) + ", total " + std::to_string(qr.total)});
    }

    if (k >= 2) {
      TruncationSpec spec = tower_truncation(k - 1, ref);
      VerificationReport rep = verify_theorem_main(spec);
      std::string why;
      for (const auto& c : rep.checks) {
        if (!c.passed) why += c.name + ": " + c.detail + "; ";
      }
      for (const auto& p : rep.problems) why += p + "; ";
      st.checks.push_back({"pushpull_theorem", rep.passed(), rep.passed() ? "relation " + rep.relation : why});

      ParamPolytope fam = canonicalize(build_pushpull_family(spec));
      st.pushpull_family = fam;
      TowerCheck c{"routes_agree", true, ""};
      NormalFan fa = normal_fan(Polytope::from_h(st.explicit_family.at_reference()));
      NormalFan fb = normal_fan(Polytope::from_h(fam.instantiate(st.explicit_family.reference)));
      MPoly vb = volume_polynomial(fam);
      if (!(fa == fb)) {
        c.passed = false;
        c.detail = "normal fans differ: " + describe_difference(fa, fb);
      } else if (vb != st.volume) {
        c.passed = false;
        c.detail = "volume polynomials differ: " + st.volume.to_string() + " vs " + vb.to_string();
      } else {
        c.detail = "normal fans and volume polynomials agree";
      }
      st.checks.push_back(c);
    }
    if (k == 5) {
      // the last bundle relation with the sign of xi4 - xi2 reversed, which is
      // what x^2 - (dc+dd)x + dc^2 + dd^2 reduces to under x = xi4 + xi5
      MPoly x5 = xi(5, 4), x4 = xi(5, 3), x3 = xi(5, 2), x2 = xi(5, 1);
      MPoly flipped = x5 * x5 - x5 * (x3 + x2 - x4) - x3 * (x4 - x2);
      MPoly op = translate(flipped, st.dictionary);
      bool ok = apply_operator(op, st.volume).is_zero();
      st.checks.push_back({"reduced_xi5_relation", ok, operator_text(flipped) + " -> " + operator_text(op)});
    }
    if (k == 5) {
      MPoly de = d(5, 4), dc = d(5, 2), dd = d(5, 3);
      MPoly op = de * de - (dc + dd) * de + dc * dc + dd * dd;
      bool ok = apply_operator(op, st.volume).is_zero();
      st.checks.push_back({"substituted_relation", ok, operator_text(op)});
    }
    steps.push_back(std::move(st));
  }
  return steps;
}

Polytope fflv_minkowski_sum(const RatVec& v) {
  if (v.size() != 5) throw std::invalid_argument("fflv_minkowski_sum: need (a,b,c,d,e)");
  const Rat &a = v[0], &b = v[1], &c = v[2], &dd = v[3], &e = v[4];
  Polytope p1 = Polytope::from_h(fflv_polytope(RatVec{0, a}).at_reference());
  Polytope p2 = Polytope::from_h(fflv_polytope(RatVec{0, b, b + c}).at_reference());
  Polytope p3 = Polytope::from_h(fflv_polytope(RatVec{0, dd, dd + e, dd + e}).at_reference());
  Polytope sum = minkowski_sum(minkowski_sum(embed(p1, 6, {0}), embed(p2, 6, {0, 1, 2})), p3);
  RatMat drop_last(5, RatVec(6));
  for (std::size_t i = 0; i < 5; ++i) drop_last[i][i] = 1;
  return linear_image(sum, drop_last);
}

MinkowskiCheck check_minkowski_decomposition(const std::vector<RatVec>& samples) {
  MinkowskiCheck out;
  out.passed = !samples.empty();
  for (const auto& s : samples) {
    Polytope lhs = fflv_minkowski_sum(s);
    Polytope rhs = Polytope::from_h(tower_explicit(5, s).at_reference());
    Comparison cmp = compare(lhs, rhs);
    out.passed = out.passed && cmp.equal;
    out.samples.emplace_back(s, cmp);
  }
  return out;
}

std::string SelfIntersectionReport::normalization() const {
  if (equal) return "volume";
  if (factorial) return "5! * volume";
  return "none";
}

SelfIntersectionReport check_prop_self_intersection(const TowerStep& step5) {
  if (step5.dictionary.size() != 5) throw std::invalid_argument("check_prop_self_intersection: needs the fifth step");
  SelfIntersectionReport r;
  r.volume = step5.volume;
  KhpRing ring = build_ring(step5.volume);
  const auto& params = ring.vars();
  auto p = [&](std::size_t i) { return MPoly::variable(params, i); };
  // a xi1 + (b+c) xi2 + c xi3 + (d+e) xi4 + e xi5, pushed through the dictionary
  std::vector<MPoly> xi_coeffs = {p(0), p(1) + p(2), p(2), p(3) + p(4), p(4)};
  std::vector<MPoly> coeffs(5, MPoly(params));
  for (std::size_t i = 0; i < 5; ++i) {
    const MPoly& img = step5.dictionary[i];
    for (std::size_t j = 0; j < 5; ++j) {
      Exponents e(5, 0);
      e[j] = 1;
      Rat m = img.coeff(e);
      if (m != 0) coeffs[j] += xi_coeffs[i] * m;
    }
  }
  r.socle = power_socle(ring, coeffs);
  r.equal = r.socle == r.volume;
  r.factorial = r.socle == r.volume * Rat(120);
  RatVec ones(5, Rat(1));
  r.spot_polynomial = r.volume.evaluate(ones);
  r.spot_volume = volume(Polytope::from_h(tower_explicit(5, ones).at_reference())).value;
  return r;
}

}  // namespace pushpull
