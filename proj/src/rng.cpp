#include "percolip/rng.hpp"

#include <cmath>

namespace percolip::rng {

namespace {

std::uint64_t poisson_inversion(Stream& stream, double mean) {
  const double u = stream.next_unit();
  double p = std::exp(-mean);
  double cum = p;
  std::uint64_t k = 0;
  // Cap far in the tail so a pathological draw cannot loop forever.
  const std::uint64_t k_max =
      static_cast<std::uint64_t>(mean + 60.0 * std::sqrt(mean + 1.0) + 60.0);
  while (u > cum && k < k_max) {
    ++k;
    p *= mean / static_cast<double>(k);
    cum += p;
  }
  return k;
}

double log_factorial(double k) {
#ifdef __GLIBC__
  // lgamma_r avoids the signgam global, so concurrent trials stay race-free.
  int sign = 0;
  return lgamma_r(k + 1.0, &sign);
#else
  return std::lgamma(k + 1.0);
#endif
}

// PTRS transformed rejection, Hormann (1993). Valid for mean >= 10,
// used here for mean >= 30 per the sampling policy.
std::uint64_t poisson_ptrs(Stream& stream, double mean) {
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = stream.next_unit() - 0.5;
    const double v = stream.next_unit();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r && kf >= 0.0) {
      return static_cast<std::uint64_t>(kf);
    }
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * log_mean - mean - log_factorial(kf);
    if (lhs <= rhs) {
      return static_cast<std::uint64_t>(kf);
    }
  }
}

}  // namespace

std::uint64_t poisson_count(Stream& stream, double mean) {
  if (mean <= 0.0) return 0;
  if (mean < 30.0) return poisson_inversion(stream, mean);
  return poisson_ptrs(stream, mean);
}

}  // namespace percolip::rng
