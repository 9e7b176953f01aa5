#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace percolip::rng {

// SplitMix64 finalizer. Used to derive independent stream seeds from a
// master seed and a list of integer identifiers (level, trial, ...), so
// that parallel trials are order-independent.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> ids) {
  std::uint64_t s = mix64(master);
  for (std::uint64_t id : ids) s = mix64(s ^ mix64(id));
  return s;
}

// Deterministic 64-bit generator. mt19937_64 output is fully specified by
// the standard, so streams are reproducible across platforms. Floating
// point draws are built from the raw bits directly; the std distribution
// classes are implementation-defined and must not be used here.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on (0,1), 53-bit resolution, never exactly 0 or 1.
  double next_unit() {
    return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double next_in(double lo, double hi) { return lo + next_unit() * (hi - lo); }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) {
    // Rejection to avoid modulo bias; n is tiny compared to 2^64 in all uses.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 gen_;
};

// Poisson-distributed count with the stated mean. Inversion by cdf walk
// for small means, PTRS transformed rejection (Hormann) otherwise.
std::uint64_t poisson_count(Stream& stream, double mean);

}  // namespace percolip::rng
