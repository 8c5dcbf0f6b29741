#include "pushpull/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pushpull {

namespace {

const std::string kPartial = "\xE2\x88\x82";  // ∂

void check_exps(const Exponents& e, std::size_t n) {
  if (e.size() != n) throw std::invalid_argument("exponent vector length does not match variable count");
  for (int k : e) {
    if (k < 0) throw std::invalid_argument("negative exponent");
  }
}

void gen_monomials(std::size_t n, int d, std::size_t pos, Exponents& cur, std::vector<Exponents>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = k;
    gen_monomials(n, d - k, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

Rat falling_factorial(int k, int order) {
  Rat f = 1;
  for (int i = 0; i < order; ++i) f *= (k - i);
  return f;
}

}  // namespace

MPoly::MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
  MPoly p(std::move(vars));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::size_t index) {
  MPoly p(std::move(vars));
  if (index >= p.nvars()) throw std::out_of_range("variable index out of range");
  Exponents e(p.nvars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, std::string_view name) {
  MPoly p(std::move(vars));
  return variable(p.vars_, p.var_index(name));
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents exps, const Rat& c) {
  MPoly p(std::move(vars));
  p.add_term(exps, c);
  return p;
}

std::size_t MPoly::var_index(std::string_view name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MPoly::has_var(std::string_view name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int MPoly::degree_in(std::size_t var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

bool MPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (d >= 0 && s != d) return false;
    d = s;
  }
  return true;
}

Rat MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::constant_term() const { return coeff(Exponents(nvars(), 0)); }

void MPoly::add_term(const Exponents& e, const Rat& c) {
  check_exps(e, nvars());
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::require_same_vars(const MPoly& o) const {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomials over different variable lists");
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_vars(b);
  MPoly r(a.vars_);
  Exponents e(a.nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MPoly MPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  MPoly r = constant(vars_, 1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

MPoly MPoly::diff(std::size_t var, int order) const {
  if (var >= nvars()) throw std::invalid_argument("diff: variable index out of range");
  if (order < 0) throw std::invalid_argument("diff: negative order");
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < order) continue;
    Exponents f = e;
    f[var] -= order;
    r.add_term(f, c * falling_factorial(e[var], order));
  }
  return r;
}

MPoly MPoly::diff(std::string_view var, int order) const { return diff(var_index(var), order); }

Rat MPoly::evaluate(const RatVec& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluate: point has wrong length");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    s += t;
  }
  return s;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (images.size() != nvars()) throw std::invalid_argument("substitute: need one image per variable");
  if (images.empty()) return *this;
  const auto& target = images.front().vars();
  for (const auto& im : images) {
    if (im.vars() != target) throw std::invalid_argument("substitute: images over different variable lists");
  }
  // powers cache per variable
  std::vector<std::vector<MPoly>> powers(nvars());
  MPoly r(target);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    r += t;
  }
  return r;
}

MPoly MPoly::with_vars(const std::vector<std::string>& new_vars) const {
  std::vector<long> map(nvars(), -1);
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
    if (it != new_vars.end()) map[i] = it - new_vars.begin();
  }
  MPoly r(new_vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (map[i] < 0) throw std::invalid_argument("with_vars: variable '" + vars_[i] + "' is used but missing");
      f[static_cast<std::size_t>(map[i])] += e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::homogeneous_part(int degree) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    if (s == degree) r.add_term(e, c);
  }
  return r;
}

MPoly MPoly::coefficient_of_power(std::size_t var, int k) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) != k) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(f, c);
  }
  return r;
}

std::vector<std::string> MPoly::used_vars() const {
  std::vector<bool> used(nvars(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (used[i]) out.push_back(vars_[i]);
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += " * ";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rat mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = pushpull::to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = pushpull::to_string(mag) + " * " + mono;
    }
    if (first) {
      s = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      s += (c < 0 ? " - " : " + ") + body;
    }
  }
  return s;
}

namespace {

std::string remove_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  return s;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

MPoly MPoly::parse(std::string_view text, const std::vector<std::string>& vars) {
  std::string s = remove_spaces(text);
  // drop every "∂" so operator strings parse like ordinary polynomials
  for (auto pos = s.find(kPartial); pos != std::string::npos; pos = s.find(kPartial)) s.erase(pos, kPartial.size());
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  MPoly result(vars);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + why);
  };
  while (i < s.size()) {
    Rat sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      fail("expected + or -");
    }
    Rat coef = sign;
    Exponents e(vars.size(), 0);
    bool need_factor = true;
    while (need_factor) {
      if (i >= s.size()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        Rat v = parse_rat(s.substr(i, j - i));
        i = j;
        coef *= v;
      } else if (is_ident_start(s[i])) {
        std::size_t j = i;
        while (j < s.size() && (is_ident_start(s[j]) || std::isdigit(static_cast<unsigned char>(s[j])))) ++j;
        std::string name = s.substr(i, j - i);
        i = j;
        int power = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::size_t k = i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) fail("missing exponent");
          power = std::stoi(s.substr(i, k - i));
          i = k;
        }
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) fail("unknown variable '" + name + "'");
        e[static_cast<std::size_t>(it - vars.begin())] += power;
      } else {
        fail(std::string("unexpected character '") + s[i] + "'");
      }
      // divisions by integer constants may follow any factor
      while (i < s.size() && s[i] == '/') {
        ++i;
        std::size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) fail("missing denominator");
        Rat d = parse_rat(s.substr(i, k - i));
        if (d == 0) fail("division by zero");
        coef /= d;
        i = k;
      }
      if (i < s.size() && s[i] == '*') {
        ++i;
      } else {
        need_factor = false;
      }
    }
    result.add_term(e, coef);
  }
  return result;
}

MPoly apply_operator(const MPoly& op, const MPoly& p) {
  if (op.nvars() != p.nvars()) throw std::invalid_argument("apply_operator: arity mismatch");
  MPoly r(p.vars());
  for (const auto& [eo, co] : op.terms()) {
    for (const auto& [ep, cp] : p.terms()) {
      Rat c = co * cp;
      Exponents f(ep.size());
      bool zero = false;
      for (std::size_t i = 0; i < ep.size() && !zero; ++i) {
        if (ep[i] < eo[i]) {
          zero = true;
        } else {
          c *= falling_factorial(ep[i], eo[i]);
          f[i] = ep[i] - eo[i];
        }
      }
      if (!zero) r.add_term(f, c);
    }
  }
  return r;
}

std::vector<Exponents> monomials_of_degree(std::size_t n, int d) {
  std::vector<Exponents> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents cur(n, 0);
  gen_monomials(n, d, 0, cur, out);
  return out;
}

std::string operator_string(const MPoly& op) {
  std::vector<std::string> names;
  for (const auto& v : op.vars()) names.push_back(kPartial + v);
  MPoly r(names);
  for (const auto& [e, c] : op.terms()) r.add_term(e, c);
  return r.to_string();
}

}  // namespace pushpull
