// JSON reports behind the command-line subcommands and the C interface.
#pragma once

#include "pushpull/io.hpp"

#include <cstdint>
#include <random>

namespace pushpull {

struct Report {
  Json json;
  bool passed = true;
};

inline constexpr std::uint64_t kDefaultSeed = 12132;

/// Seeded positive rationals with numerators 1..9 and denominators 1..3.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  Rat positive();
  long integer(long lo, long hi);

 private:
  std::mt19937_64 rng_;
};

Report build_report(const ParamPolytope& p);
Report volume_report(const ParamPolytope& p);
Report ring_report(const ParamPolytope& p, int max_degree);
Report pushpull_report(const TruncationSpec& spec, bool fail_fast);
Report gk_report(const GkInput& in, unsigned samples, std::uint64_t seed);
Report fflv_report(const Json& input);
Report tower_report(unsigned samples, std::uint64_t seed);
Report figures_report();

/// Property sweep over random words in A2/A3 and random integral weights,
/// keeping proper cubes until `count` instances are collected.
Json gk_property_sweep(unsigned count, std::uint64_t seed, bool* passed);

}  // namespace pushpull
