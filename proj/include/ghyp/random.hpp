#pragma once

#include <cstdint>
#include <random>

namespace ghyp {

// Seeded random stream with hand-rolled variate transforms.  The standard
// library leaves distribution algorithms implementation-defined, so every
// transform lives here: identical seed means bit-identical output on any
// platform.  Not safe for concurrent use; give each thread its own stream.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on the open interval (0, 1).
  double u01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal (Marsaglia polar, second deviate cached).
  double normal();

  // Exponential with mean 1.
  double exponential() { return -std::log(u01()); }

  // Gamma with the given shape and unit scale (Marsaglia-Tsang).
  double gamma(double shape);

  // Beta(a, b) via two gamma draws.
  double beta(double a, double b);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace ghyp
