// Exact rational scalars shared by every module.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace pushpull {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Parses "p", "-p", "p/q" (whitespace tolerated). Throws std::invalid_argument.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

Int numerator_of(const Rat& r);
Int denominator_of(const Rat& r);
bool is_integer(const Rat& r);

Rat dot(const RatVec& a, const RatVec& b);

/// Positive rescaling of v to a primitive integer vector; returns the factor used.
/// The zero vector is returned unchanged with factor 1.
Rat primitive_scale(const RatVec& v);
RatVec primitive(const RatVec& v);

std::string to_string(const RatVec& v);

}  // namespace pushpull
