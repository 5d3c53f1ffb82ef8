#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gixgd/distribution.hpp"

namespace gixgd {

// Deterministic random stream. The generator is mt19937_64, whose output
// sequence is fixed by the C++ standard, so identical seeds reproduce
// bit-identical draws on every platform. Single-owner: not thread-safe.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  // Independent stream index `index` derived from the same base seed
  // (splitmix64 scrambling), for parallel generation.
  static RngStream substream(std::uint64_t seed, std::uint64_t index);

  // Strictly inside (0,1): ((x >> 11) + 0.5) * 2^-53.
  double uniform01();

  // Standard normal via the Marsaglia polar method. The paired second
  // variate is discarded: no hidden cache state between calls.
  double normal();

  // Exponential with the given rate, mean 1/rate.
  double exponential(double rate);

  // Gamma draw in the rate convention (mean = shape/rate): exponential
  // shortcut at shape = 1, Marsaglia-Tsang rejection for shape > 1, and the
  // U^{1/shape} boost for shape < 1.
  double gamma(double shape, double rate);

 private:
  std::mt19937_64 gen_;
};

// Branch counts from the mixture step; exp_branch + gamma_branch = n.
struct MixtureTally {
  std::uint64_t exp_branch = 0;    // U <= theta/(theta+1)
  std::uint64_t gamma_branch = 0;
};

// The six-step generator: per draw, consume U ~ uniform(0,1),
// V ~ gamma(1, theta), W ~ gamma(3, theta) in that fixed order;
// Z = V if U <= theta/(theta+1) else W; X = 1/Z; Y = X^{1/alpha}.
// Exactly one U, one V and one W are consumed per draw. The optional
// tally records which mixture branch each draw took.
std::vector<double> sample_gixgd(RngStream& stream, const GixgdParams& p,
                                 std::size_t n, MixtureTally* tally = nullptr);

// The alpha = 1 special case, coded as its own loop (no final power map);
// stream consumption matches sample_gixgd exactly.
std::vector<double> sample_ixgd(RngStream& stream, double theta,
                                std::size_t n);

}  // namespace gixgd
