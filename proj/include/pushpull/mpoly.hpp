// Sparse multivariate polynomials over Q with a fixed variable ordering.
//
// Terms are kept in a std::map keyed by exponent vectors, so iteration is in
// lexicographic order of exponents and every output derived from it is
// deterministic. Zero coefficients are never stored.
#pragma once

#include "pushpull/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pushpull {

using Exponents = std::vector<int>;

class MPoly {
 public:
  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars);

  static MPoly constant(std::vector<std::string> vars, const Rat& c);
  static MPoly variable(std::vector<std::string> vars, std::size_t index);
  static MPoly variable(std::vector<std::string> vars, std::string_view name);
  static MPoly monomial(std::vector<std::string> vars, Exponents exps, const Rat& c = Rat(1));

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  std::size_t var_index(std::string_view name) const;
  bool has_var(std::string_view name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  Rat coeff(const Exponents& e) const;
  /// Value of the constant term.
  Rat constant_term() const;

  void add_term(const Exponents& e, const Rat& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int k) const;
  MPoly diff(std::size_t var, int order = 1) const;
  MPoly diff(std::string_view var, int order = 1) const;
  Rat evaluate(const RatVec& point) const;

  /// Replaces variable i by images[i]; all images share one target variable list.
  MPoly substitute(const std::vector<MPoly>& images) const;
  /// Re-expresses the polynomial over a new variable list containing every
  /// variable this polynomial actually uses. Unused old variables may be dropped.
  MPoly with_vars(const std::vector<std::string>& new_vars) const;
  MPoly homogeneous_part(int degree) const;
  /// Coefficient of var^k, as a polynomial over the same variables (var absent).
  MPoly coefficient_of_power(std::size_t var, int k) const;
  /// Variables that appear with a positive exponent in some term.
  std::vector<std::string> used_vars() const;

  /// "c * a^i * b^j + ..." with terms in descending lexicographic order.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "a*b", "-b^2/2" style and "∂a" names.
  static MPoly parse(std::string_view text, const std::vector<std::string>& vars);

 private:
  void require_same_vars(const MPoly& o) const;
  std::vector<std::string> vars_;
  std::map<Exponents, Rat> terms_;
};

/// Applies the constant-coefficient differential operator `op` (a polynomial in
/// the partial derivatives, variable i of op <-> d/d(variable i of p)) to p.
MPoly apply_operator(const MPoly& op, const MPoly& p);

/// All exponent vectors of total degree d in n variables, lexicographically
/// descending (x1^d first).
std::vector<Exponents> monomials_of_degree(std::size_t n, int d);

/// Prefixes every variable name with "∂" for display.
std::string operator_string(const MPoly& op);

}  // namespace pushpull
