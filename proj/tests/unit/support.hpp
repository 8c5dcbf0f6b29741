// Shared fixtures for the unit tests.
#pragma once

#include "doctest.h"
#include "pushpull/io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#ifndef PP_TEST_DATA
#define PP_TEST_DATA "tests/data"
#endif

namespace testing_support {

inline pushpull::Json load(const std::string& name) {
  std::ifstream in(std::string(PP_TEST_DATA) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing test data " << name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return pushpull::Json::parse(ss.str());
}

inline std::string read_text(const std::string& name) {
  std::ifstream in(std::string(PP_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline pushpull::ParamPolytope trapezoid() { return pushpull::polytope_from_json(load("trapezoid.json")); }

inline pushpull::MPoly poly(const std::string& text, const std::vector<std::string>& vars) {
  return pushpull::MPoly::parse(text, vars);
}

// small rationals n/d with n in [lo, hi], d in [1, 3]
inline pushpull::Rat random_rat(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, 3);
  return pushpull::Rat(num(rng)) / pushpull::Rat(den(rng));
}

}  // namespace testing_support
