#include "pushpull/khp_ring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pushpull {

namespace {

// Row-echelon span that grows one vector at a time.
class Span {
 public:
  explicit Span(std::size_t width) : width_(width) {}
  /// Adds v; returns false if it was already in the span.
  bool add(RatVec v) {
    reduce(v);
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    Rat inv = 1 / v[p];
    for (auto& x : v) {
      if (x != 0) x *= inv;
    }
    rows_.emplace_back(p, std::move(v));
    return true;
  }
  std::size_t dim() const { return rows_.size(); }

 private:
  void reduce(RatVec& v) const {
    for (const auto& [p, row] : rows_) {
      if (v[p] == 0) continue;
      Rat f = v[p];
      for (std::size_t k = 0; k < width_; ++k) {
        if (row[k] != 0) v[k] -= f * row[k];
      }
    }
  }
  std::size_t width_;
  std::vector<std::pair<std::size_t, RatVec>> rows_;
};

using MonomialIndex = std::map<Exponents, std::size_t>;

MonomialIndex index_of(const std::vector<Exponents>& monos) {
  MonomialIndex idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
  return idx;
}

RatVec coefficients(const MPoly& p, const MonomialIndex& idx) {
  RatVec v(idx.size());
  for (const auto& [e, c] : p.terms()) {
    auto it = idx.find(e);
    if (it == idx.end()) throw std::logic_error("coefficients: monomial outside the graded piece");
    v[it->second] = c;
  }
  return v;
}

MPoly from_coefficients(const std::vector<std::string>& vars, const std::vector<Exponents>& monos, const RatVec& v) {
  MPoly p(vars);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (v[i] != 0) p.add_term(monos[i], v[i]);
  }
  return p;
}

// Span of var_i * g for every g in lower, as vectors over the degree-d monomials.
Span products_span(const std::vector<MPoly>& lower, const std::vector<std::string>& vars, const MonomialIndex& idx) {
  Span span(idx.size());
  for (const auto& g : lower) {
    for (std::size_t i = 0; i < vars.size(); ++i) span.add(coefficients(MPoly::variable(vars, i) * g, idx));
  }
  return span;
}

Rat factorial(int n) {
  Rat f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::size_t KhpRing::total_rank() const {
  std::size_t s = 0;
  for (auto h : hilbert) s += h;
  return s;
}

KhpRing build_ring(const MPoly& vol, const RingOptions& options) {
  if (vol.is_zero()) throw std::invalid_argument("build_ring: zero polynomial");
  if (!vol.is_homogeneous()) throw std::invalid_argument("build_ring: polynomial is not homogeneous");
  KhpRing r;
  r.vol = vol;
  r.top = vol.total_degree();
  const auto& vars = vol.vars();
  const std::size_t nv = vars.size();
  for (int d = 0; d <= r.top; ++d) {
    auto monos = monomials_of_degree(nv, d);
    auto images = monomials_of_degree(nv, r.top - d);
    auto idx = index_of(images);
    LinMap m(images.size(), monos.size());
    for (std::size_t c = 0; c < monos.size(); ++c) {
      MPoly img = apply_operator(MPoly::monomial(vars, monos[c]), vol);
      RatVec col = coefficients(img, idx);
      for (std::size_t k = 0; k < col.size(); ++k) m.at(k, c) = col[k];
    }
    Rref red = rref(m);
    std::vector<MPoly> basis;
    for (auto p : red.pivots) basis.push_back(MPoly::monomial(vars, monos[p]));
    std::vector<MPoly> ann;
    for (const auto& v : kernel(m)) ann.push_back(from_coefficients(vars, monos, v));
    r.hilbert.push_back(red.rank());
    r.monomials.push_back(std::move(monos));
    r.image_monomials.push_back(std::move(images));
    r.evaluation.push_back(std::move(m));
    r.basis.push_back(std::move(basis));
    r.annihilator.push_back(std::move(ann));
  }

  r.generators.assign(static_cast<std::size_t>(r.top) + 2, {});
  for (int d = 1; d <= r.top; ++d) {
    auto idx = index_of(r.monomials[static_cast<std::size_t>(d)]);
    Span span = products_span(r.annihilator[static_cast<std::size_t>(d) - 1], vars, idx);
    for (const auto& g : r.annihilator[static_cast<std::size_t>(d)]) {
      if (span.add(coefficients(g, idx))) r.generators[static_cast<std::size_t>(d)].push_back(g);
    }
  }
  auto over = monomials_of_degree(nv, r.top + 1);
  if (over.size() <= options.max_monomials_top_plus_one) {
    auto idx = index_of(over);
    Span span = products_span(r.annihilator[static_cast<std::size_t>(r.top)], vars, idx);
    for (const auto& e : over) {
      MPoly g = MPoly::monomial(vars, e);
      if (span.add(coefficients(g, idx))) r.generators.back().push_back(g);
    }
  } else {
    r.generators_complete = false;
  }

  bool symmetric = true;
  for (int d = 0; d <= r.top; ++d) {
    if (r.hilbert[static_cast<std::size_t>(d)] != r.hilbert[static_cast<std::size_t>(r.top - d)]) symmetric = false;
  }
  r.gorenstein = symmetric && r.hilbert.front() == 1 && r.hilbert.back() == 1;
  return r;
}

std::vector<std::size_t> hilbert_function(const MPoly& vol) {
  if (vol.is_zero()) throw std::invalid_argument("hilbert_function: zero polynomial");
  if (!vol.is_homogeneous()) throw std::invalid_argument("hilbert_function: polynomial is not homogeneous");
  const int top = vol.total_degree();
  const auto& vars = vol.vars();
  std::vector<std::size_t> h;
  for (int d = 0; d <= top; ++d) {
    // rank is symmetric in d and top-d; compute the smaller side
    if (d > top - d) {
      h.push_back(h[static_cast<std::size_t>(top - d)]);
      continue;
    }
    auto monos = monomials_of_degree(vars.size(), d);
    auto idx = index_of(monomials_of_degree(vars.size(), top - d));
    Span span(idx.size());
    for (const auto& e : monos) span.add(coefficients(apply_operator(MPoly::monomial(vars, e), vol), idx));
    h.push_back(span.dim());
  }
  return h;
}

RingClass make_class(const KhpRing& ring, const MPoly& rep) {
  if (rep.vars() != ring.vars()) throw std::invalid_argument("make_class: operator variables differ from the ring's");
  return {&ring, rep, apply_operator(rep, ring.vol)};
}

RingClass class_of_polytope(const KhpRing& ring, const RatVec& coords) {
  if (coords.size() != ring.vars().size()) throw std::invalid_argument("class_of_polytope: arity mismatch");
  MPoly rep(ring.vars());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0) rep += MPoly::variable(ring.vars(), i) * coords[i];
  }
  return make_class(ring, rep);
}

RingClass multiply(const RingClass& x, const RingClass& y) {
  if (x.ring != y.ring || x.ring == nullptr) throw std::invalid_argument("multiply: classes from different rings");
  return make_class(*x.ring, x.rep * y.rep);
}

bool is_relation(const KhpRing& ring, const MPoly& op) {
  if (op.vars() != ring.vars()) throw std::invalid_argument("is_relation: arity mismatch");
  return apply_operator(op, ring.vol).is_zero();
}

Rat socle_pairing(const RingClass& x) {
  if (x.ring == nullptr) throw std::invalid_argument("socle_pairing: detached class");
  if (!x.rep.is_zero() && (!x.rep.is_homogeneous() || x.rep.total_degree() != x.ring->top)) {
    throw std::invalid_argument("socle_pairing: class is not homogeneous of top degree");
  }
  return x.canonical.constant_term();
}

OperatorSolutions solve_for_operator(const KhpRing& ring, const MPoly& target, int degree) {
  if (target.vars() != ring.vars()) throw std::invalid_argument("solve_for_operator: arity mismatch");
  OperatorSolutions out;
  if (degree < 0 || degree > ring.top) {
    if (target.is_zero()) out.particular = MPoly(ring.vars());
    return out;
  }
  const auto d = static_cast<std::size_t>(degree);
  out.kernel = ring.annihilator[d];
  auto idx = index_of(ring.image_monomials[d]);
  RatVec rhs(idx.size());
  for (const auto& [e, c] : target.terms()) {
    auto it = idx.find(e);
    if (it == idx.end()) return out;
    rhs[it->second] = c;
  }
  auto x = solve(ring.evaluation[d], rhs);
  if (x) out.particular = from_coefficients(ring.vars(), ring.monomials[d], *x);
  return out;
}

MPoly power_socle(const KhpRing& ring, const std::vector<MPoly>& coeffs) {
  if (coeffs.size() != ring.vars().size()) throw std::invalid_argument("power_socle: arity mismatch");
  if (coeffs.empty()) throw std::invalid_argument("power_socle: no coefficients");
  const auto& out_vars = coeffs.front().vars();
  MPoly total(out_vars);
  Rat top_fact = factorial(ring.top);
  for (const auto& alpha : monomials_of_degree(coeffs.size(), ring.top)) {
    Rat pairing = apply_operator(MPoly::monomial(ring.vars(), alpha), ring.vol).constant_term();
    if (pairing == 0) continue;
    Rat multinomial = top_fact;
    MPoly term = MPoly::constant(out_vars, Rat(1));
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      multinomial /= factorial(alpha[i]);
      if (alpha[i] > 0) term = term * coeffs[i].pow(alpha[i]);
    }
    total += term * (multinomial * pairing);
  }
  return total;
}

std::string operator_text(const MPoly& op) {
  if (op.is_zero()) return "0";
  // highest power of the last variable first
  std::vector<std::pair<Exponents, Rat>> terms(op.terms().begin(), op.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(y.first.rbegin(), y.first.rend(), x.first.rbegin(), x.first.rend());
  });
  std::string s;
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "\xE2\x88\x82" + op.vars()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rat mag = abs(c);
    std::string body = mono.empty() ? to_string(mag) : (mag == 1 ? mono : to_string(mag) + "*" + mono);
    if (s.empty()) {
      s = (c < 0 ? "-" : "") + body;
    } else {
      s += (c < 0 ? " - " : " + ") + body;
    }
  }
  return s;
}

std::string presentation(const KhpRing& ring) {
  std::string s = "Z[";
  for (std::size_t i = 0; i < ring.vars().size(); ++i) s += (i ? ",∂" : "∂") + ring.vars()[i];
  s += "]/(";
  bool first = true;
  for (const auto& gens : ring.generators) {
    for (const auto& g : gens) {
      s += (first ? "" : ", ") + operator_text(g);
      first = false;
    }
  }
  if (!ring.generators_complete) s += first ? "..." : ", ...";
  return s + ")";
}

QuotientRank quotient_rank(const std::vector<MPoly>& relations, int max_degree) {
  QuotientRank out;
  if (relations.empty()) throw std::invalid_argument("quotient_rank: no relations");
  const auto& vars = relations.front().vars();
  for (const auto& r : relations) {
    if (r.vars() != vars) throw std::invalid_argument("quotient_rank: relations over different variables");
    if (!r.is_zero() && !r.is_homogeneous()) throw std::invalid_argument("quotient_rank: relation is not homogeneous");
  }
  for (int d = 0; d <= max_degree; ++d) {
    auto monos = monomials_of_degree(vars.size(), d);
    auto idx = index_of(monos);
    Span span(monos.size());
    for (const auto& r : relations) {
      if (r.is_zero() || r.total_degree() > d) continue;
      for (const auto& e : monomials_of_degree(vars.size(), d - r.total_degree())) {
        span.add(coefficients(MPoly::monomial(vars, e) * r, idx));
      }
    }
    out.hilbert.push_back(monos.size() - span.dim());
    out.total += out.hilbert.back();
  }
  return out;
}

}  // namespace pushpull
