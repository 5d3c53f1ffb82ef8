#include "gixgd/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace gixgd {

namespace {

// splitmix64: bijective scrambler used to decorrelate seeds and substreams.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : gen_(splitmix64(seed)) {}

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t index) {
  RngStream s(0);
  s.gen_.seed(splitmix64(splitmix64(seed) + index + 1));
  return s;
}

double RngStream::uniform01() {
  // 53 significant bits centered in each cell: never exactly 0 or 1
  return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
  for (;;) {
    const double u = 2.0 * uniform01() - 1.0;
    const double v = 2.0 * uniform01() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0)
      return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double RngStream::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::domain_error("exponential: rate must be positive");
  return -std::log(uniform01()) / rate;
}

double RngStream::gamma(double shape, double rate) {
  if (!(shape > 0.0) || !std::isfinite(shape))
    throw std::domain_error("gamma: shape must be positive");
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::domain_error("gamma: rate must be positive");
  if (shape == 1.0) return exponential(rate);
  if (shape < 1.0) {
    // boost: G(shape) = G(shape + 1) * U^{1/shape}
    const double g = gamma(shape + 1.0, rate);
    return g * std::pow(uniform01(), 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze/rejection, valid for shape >= 1
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double x = normal();
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
      return d * v / rate;
  }
}

std::vector<double> sample_gixgd(RngStream& stream, const GixgdParams& p,
                                 std::size_t n, MixtureTally* tally) {
  if (n == 0) throw std::domain_error("sample_gixgd: n must be >= 1");
  const double weight = p.theta / (p.theta + 1.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = stream.uniform01();
    const double v = stream.gamma(1.0, p.theta);
    const double w = stream.gamma(3.0, p.theta);
    const bool take_exp = u <= weight;
    if (tally != nullptr)
      (take_exp ? tally->exp_branch : tally->gamma_branch) += 1;
    const double z = take_exp ? v : w;
    out.push_back(std::pow(1.0 / z, 1.0 / p.alpha));
  }
  return out;
}

std::vector<double> sample_ixgd(RngStream& stream, double theta,
                                std::size_t n) {
  if (!(theta > 0.0) || !std::isfinite(theta))
    throw std::domain_error("sample_ixgd: theta must be positive");
  if (n == 0) throw std::domain_error("sample_ixgd: n must be >= 1");
  const double weight = theta / (theta + 1.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = stream.uniform01();
    const double v = stream.gamma(1.0, theta);
    const double w = stream.gamma(3.0, theta);
    out.push_back(1.0 / ((u <= weight) ? v : w));
  }
  return out;
}

}  // namespace gixgd
