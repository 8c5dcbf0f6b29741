#include "pushpull/weyl.hpp"

#include "pushpull/linalg.hpp"

#include <functional>
#include <stdexcept>

namespace pushpull {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

// Support numbers of the tail cube, optionally with beta_1 subtracted from lambda.
RatVec tail_support(const RatMat& chain, const RatVec& upper, bool minus_first) {
  RatVec out;
  for (std::size_t k = 1; k < upper.size(); ++k) out.push_back(upper[k] - (minus_first ? chain[k][0] : Rat(0)));
  return out;
}

RatMat tail_chain(const RatMat& chain) {
  RatMat out;
  for (std::size_t k = 1; k < chain.size(); ++k) out.emplace_back(chain[k].begin() + 1, chain[k].end());
  return out;
}

RatVec add_shift(const RatVec& upper, const LemmaShift& s) {
  RatVec out = upper;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += s.t * s.w[k];
  return out;
}

// Deterministic search over t*w, w_k = m^(k-1), for support numbers accepted by `ok`.
std::optional<LemmaShift> search_shift(std::size_t length, const std::function<bool(const LemmaShift&)>& ok) {
  for (int m = 2; m <= 16; ++m) {
    LemmaShift s;
    Rat p = 1;
    for (std::size_t k = 0; k < length; ++k) {
      s.w.push_back(p);
      p *= m;
    }
    for (int t = 1; t <= 1 << 12; t *= 2) {
      s.t = t;
      if (ok(s)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace

void BetaSequence::validate() const {
  const std::size_t n = gram.size();
  for (const auto& row : gram) {
    if (row.size() != n) throw std::invalid_argument("gram matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("gram matrix is not symmetric");
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    RatMat minor(k, RatVec(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = gram[i][j];
    }
    if (determinant(minor) <= 0) throw std::invalid_argument("gram matrix is not positive definite");
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw std::invalid_argument("beta " + std::to_string(i + 1) + " has the wrong length");
    bool zero = true;
    for (const auto& c : vectors[i]) zero = zero && c == 0;
    if (zero) throw std::invalid_argument("beta " + std::to_string(i + 1) + " is zero");
  }
}

BetaSequence BetaSequence::tail() const {
  if (vectors.empty()) throw std::invalid_argument("tail of an empty sequence");
  return {RatMat(vectors.begin() + 1, vectors.end()), gram};
}

Rat inner(const RatMat& gram, const RatVec& a, const RatVec& b) {
  if (a.size() != gram.size() || b.size() != gram.size()) throw std::invalid_argument("inner: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram[i][j] * b[j];
  }
  return s;
}

Rat pairing(const RatMat& gram, const RatVec& alpha, const RatVec& beta) {
  Rat bb = inner(gram, beta, beta);
  if (bb == 0) throw std::invalid_argument("pairing with a zero vector");
  return 2 * inner(gram, alpha, beta) / bb;
}

RatVec reflect_vector(const RatMat& gram, const RatVec& beta, const RatVec& alpha) {
  Rat c = pairing(gram, alpha, beta);
  RatVec out = alpha;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= c * beta[i];
  return out;
}

RatVec reflect(const BetaSequence& betas, std::size_t i, const RatVec& alpha) {
  if (i >= betas.length()) throw std::out_of_range("reflect: index out of range");
  return reflect_vector(betas.gram, betas.vectors[i], alpha);
}

RootDatum type_a(std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("type A needs rank >= 1");
  RootDatum d;
  d.type = "A";
  d.rank = rank;
  const std::size_t n = rank + 1;
  d.gram.assign(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) d.gram[i][i] = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    RatVec a(n);
    a[i] = 1;
    a[i + 1] = -1;
    d.simple_roots.push_back(a);
  }
  for (std::size_t i = 0; i < n; ++i) d.rho.push_back(Rat(static_cast<long>(rank - i)));
  return d;
}

BetaSequence betas_from_word(const RootDatum& datum, const std::vector<int>& word) {
  BetaSequence b;
  b.gram = datum.gram;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || static_cast<std::size_t>(*it) > datum.rank) {
      throw std::invalid_argument("word letter " + std::to_string(*it) + " is not a simple root index");
    }
    b.vectors.push_back(datum.simple_roots[static_cast<std::size_t>(*it) - 1]);
  }
  return b;
}

std::string to_string(CubeStatus s) {
  switch (s) {
    case CubeStatus::proper: return "proper";
    case CubeStatus::degenerate: return "degenerate";
    case CubeStatus::twisted: return "twisted";
  }
  return "?";
}

RatMat chain_coefficients(const BetaSequence& betas) {
  betas.validate();
  const std::size_t l = betas.length();
  RatMat c(l, RatVec(l));
  for (std::size_t k = 0; k < l; ++k) {
    for (std::size_t j = 0; j < k; ++j) c[k][j] = pairing(betas.gram, betas.vectors[j], betas.vectors[k]);
  }
  return c;
}

CubeStatus classify(const RatMat& chain, const RatVec& upper) {
  // Vertices of the cube on the first k coordinates are the choices x_j in
  // {0, bound_j}; the chained bound is affine, so its minimum is at one of them.
  std::vector<RatVec> points{RatVec{}};
  CubeStatus status = CubeStatus::proper;
  for (std::size_t k = 0; k < upper.size(); ++k) {
    std::vector<RatVec> next;
    for (const auto& x : points) {
      Rat bound = upper[k];
      for (std::size_t j = 0; j < k; ++j) bound -= chain[k][j] * x[j];
      if (bound < 0) return CubeStatus::twisted;
      if (bound == 0) status = CubeStatus::degenerate;
      RatVec lo = x, hi = x;
      lo.push_back(0);
      hi.push_back(bound);
      next.push_back(std::move(lo));
      if (bound != 0) next.push_back(std::move(hi));
    }
    points = std::move(next);
  }
  return status;
}

RatVec support_numbers(const BetaSequence& betas, const RatVec& lambda) {
  RatVec u;
  for (const auto& b : betas.vectors) u.push_back(pairing(betas.gram, lambda, b));
  return u;
}

GKCube gk_cube_from_support(const BetaSequence& betas, const RatVec& upper) {
  if (upper.size() != betas.length()) throw std::invalid_argument("gk_cube: support length mismatch");
  GKCube c;
  c.betas = betas;
  c.chain = chain_coefficients(betas);
  c.upper = upper;
  c.status = classify(c.chain, upper);
  return c;
}

GKCube gk_cube(const BetaSequence& betas, const RatVec& lambda) {
  betas.validate();
  if (lambda.size() != betas.ambient()) throw std::invalid_argument("gk_cube: weight length mismatch");
  return gk_cube_from_support(betas, support_numbers(betas, lambda));
}

HPolytope GKCube::h_rep() const {
  const std::size_t l = upper.size();
  HPolytope h;
  h.dim = l;
  for (std::size_t k = 0; k < l; ++k) {
    RatVec lo(l);
    lo[k] = -1;
    h.normals.push_back(lo);
    h.offsets.push_back(0);
    RatVec hi(l);
    for (std::size_t j = 0; j < k; ++j) hi[j] = chain[k][j];
    hi[k] = 1;
    h.normals.push_back(hi);
    h.offsets.push_back(upper[k]);
  }
  return h;
}

Polytope GKCube::polytope() const {
  if (status == CubeStatus::twisted) throw std::domain_error("twisted cube has no geometric realization");
  return Polytope::from_h(h_rep());
}

ParamPolytope gk_family(const BetaSequence& betas, const RatVec& lambda_reference) {
  betas.validate();
  const std::size_t l = betas.length(), m = betas.ambient();
  if (lambda_reference.size() != m) throw std::invalid_argument("gk_family: weight length mismatch");
  auto chain = chain_coefficients(betas);
  ParamPolytope p;
  p.dim = l;
  p.params = numbered("l", m);
  p.reference = lambda_reference;
  for (std::size_t k = 0; k < l; ++k) {
    RatVec lo(l);
    lo[k] = -1;
    p.ineqs.push_back({lo, AffineForm::zero(m)});
    RatVec hi(l);
    for (std::size_t j = 0; j < k; ++j) hi[j] = chain[k][j];
    hi[k] = 1;
    // (lambda, beta_k) = sum_i 2 (G beta_k)_i / <beta_k, beta_k> * lambda_i
    const auto& b = betas.vectors[k];
    Rat bb = inner(betas.gram, b, b);
    AffineForm f = AffineForm::zero(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rat gi = 0;
      for (std::size_t j = 0; j < m; ++j) gi += betas.gram[i][j] * b[j];
      f.coeffs[i] = 2 * gi / bb;
    }
    p.ineqs.push_back({hi, f});
  }
  return p;
}

ParamPolytope gk_support_family(const BetaSequence& betas, const RatVec& upper_reference) {
  const std::size_t l = betas.length();
  if (upper_reference.size() != l) throw std::invalid_argument("gk_support_family: support length mismatch");
  auto chain = chain_coefficients(betas);
  ParamPolytope p;
  p.dim = l;
  p.params = numbered("L", l);
  for (const auto& name : numbered("U", l)) p.params.push_back(name);
  p.reference.assign(l, Rat(0));
  for (const auto& u : upper_reference) p.reference.push_back(u);
  for (std::size_t k = 0; k < l; ++k) {
    RatVec lo(l);
    lo[k] = -1;
    p.ineqs.push_back({lo, AffineForm::param(2 * l, k)});
    RatVec hi(l);
    for (std::size_t j = 0; j < k; ++j) hi[j] = chain[k][j];
    hi[k] = 1;
    p.ineqs.push_back({hi, AffineForm::param(2 * l, l + k)});
  }
  return p;
}

RatVec dominant_vertex(const BetaSequence& betas, const RatVec& lambda) {
  betas.validate();
  RatVec p;
  for (std::size_t k = 0; k < betas.length(); ++k) {
    RatVec mu = betas.vectors[k];
    for (std::size_t j = k; j-- > 0;) mu = reflect(betas, j, mu);
    p.push_back(pairing(betas.gram, lambda, mu));
  }
  return p;
}

RatVec chevalley_pieri(const BetaSequence& betas, const RatVec& lambda) { return dominant_vertex(betas, lambda); }

std::optional<LemmaShift> find_proper_shift(const BetaSequence& betas, const RatVec& upper) {
  auto chain = chain_coefficients(betas);
  return search_shift(betas.length(), [&](const LemmaShift& s) {
    return classify(chain, add_shift(upper, s)) == CubeStatus::proper;
  });
}

LemmaResult verify_lemma_demazure(const BetaSequence& betas, const RatVec& lambda, bool allow_shift) {
  betas.validate();
  const std::size_t l = betas.length();
  if (l == 0) throw std::invalid_argument("verify_lemma_demazure: empty sequence");
  if (lambda.size() != betas.ambient()) throw std::invalid_argument("verify_lemma_demazure: weight length mismatch");
  const RatMat chain = chain_coefficients(betas);
  const RatMat tchain = tail_chain(chain);
  const RatVec upper = support_numbers(betas, lambda);

  auto all_proper = [&](const RatVec& u) {
    return classify(chain, u) == CubeStatus::proper &&
           classify(tchain, tail_support(chain, u, false)) == CubeStatus::proper &&
           classify(tchain, tail_support(chain, u, true)) == CubeStatus::proper;
  };

  LemmaResult r;
  r.precondition = all_proper(upper);
  RatVec u = upper;
  if (!r.precondition) {
    if (!allow_shift) {
      r.detail = "an input cube is not a proper polytope";
      return r;
    }
    r.shift = search_shift(l, [&](const LemmaShift& s) { return all_proper(add_shift(upper, s)); });
    if (!r.shift) {
      r.detail = "no shift of the support numbers makes every cube proper";
      return r;
    }
    u = add_shift(upper, *r.shift);
  }

  Polytope whole = gk_cube_from_support(betas, u).polytope();
  std::vector<std::size_t> first_last(l);
  for (std::size_t i = 0; i < l; ++i) first_last[i] = i == 0 ? l - 1 : i - 1;
  Polytope moved = embed(whole, l, first_last);

  Polytope cayley;
  if (l == 1) {
    cayley = Polytope::from_points(1, {RatVec{Rat(0)}, RatVec{Rat(1)}});
  } else {
    BetaSequence tail = betas.tail();
    Polytope top = gk_cube_from_support(tail, tail_support(chain, u, true)).polytope();
    Polytope bottom = gk_cube_from_support(tail, tail_support(chain, u, false)).polytope();
    cayley = cayley_sum(top, bottom);
  }
  NormalFan a = normal_fan(moved), b = normal_fan(cayley);
  r.analogous = a == b;
  r.detail = r.analogous ? "normal fans agree" : describe_difference(a, b);
  return r;
}

PieriCheck check_chevalley_pieri(const BetaSequence& betas, const RatVec& lambda) {
  const std::size_t l = betas.length();
  PieriCheck out;
  out.coefficients = chevalley_pieri(betas, lambda);
  const RatVec upper = support_numbers(betas, lambda);
  RatVec ref = upper;
  if (classify(chain_coefficients(betas), upper) != CubeStatus::proper) {
    out.reference_shift = find_proper_shift(betas, upper);
    if (!out.reference_shift) return out;
    ref = add_shift(upper, *out.reference_shift);
  }
  ParamPolytope fam = gk_support_family(betas, ref);
  MPoly vol = volume_polynomial(fam);
  out.hilbert = hilbert_function(vol);
  // class of the cube minus sum_j c_j d/dL_j
  MPoly op(fam.params);
  for (std::size_t k = 0; k < l; ++k) {
    op += MPoly::variable(fam.params, l + k) * upper[k];
    op -= MPoly::variable(fam.params, k) * out.coefficients[k];
  }
  out.relation = operator_text(op);
  out.holds = apply_operator(op, vol).is_zero();
  return out;
}

Comparison gamma_one_projection(const BetaSequence& betas, const RatVec& lambda) {
  const std::size_t l = betas.length();
  if (l < 2) throw std::invalid_argument("gamma_one_projection: needs at least two betas");
  GKCube cube = gk_cube(betas, lambda);
  if (cube.status != CubeStatus::proper) throw std::domain_error("gamma_one_projection: cube is not proper");
  std::vector<std::size_t> first_last(l);
  for (std::size_t i = 0; i < l; ++i) first_last[i] = i == 0 ? l - 1 : i - 1;
  Polytope face = slice_last(embed(cube.polytope(), l, first_last), cube.upper[0]);
  RatVec reflected = reflect(betas, 0, lambda);
  Polytope tail = Polytope::from_h(gk_cube(betas.tail(), reflected).h_rep());
  return compare(face, tail);
}

}  // namespace pushpull
