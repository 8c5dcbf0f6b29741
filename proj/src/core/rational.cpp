#include "pushpull/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pushpull {

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string s = strip(text);
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den)) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(n, d);
}

std::string to_string(const Rat& r) {
  Int n = numerator_of(r), d = denominator_of(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Int numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
Int denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }
bool is_integer(const Rat& r) { return denominator_of(r) == 1; }

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat primitive_scale(const RatVec& v) {
  Int l = 1, g = 0;
  for (const auto& x : v) {
    if (x == 0) continue;
    l = boost::multiprecision::lcm(l, denominator_of(x));
  }
  for (const auto& x : v) {
    if (x == 0) continue;
    Int scaled = numerator_of(x) * (l / denominator_of(x));
    g = boost::multiprecision::gcd(g, abs(scaled));
  }
  if (g == 0) return Rat(1);
  return Rat(l, g);
}

RatVec primitive(const RatVec& v) {
  Rat f = primitive_scale(v);
  RatVec out(v);
  for (auto& x : out) x *= f;
  return out;
}

std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

}  // namespace pushpull
