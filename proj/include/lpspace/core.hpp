#ifndef LPSPACE_CORE_HPP
#define LPSPACE_CORE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpspace {

// Domain errors map to CLI exit code 2, size-cap errors to exit code 3.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conjugate exponent q with 1/p + 1/q = 1.
inline double conjugate_index(double p) {
  if (!(p > 1.0)) throw DomainError("conjugate_index: requires p > 1");
  return p / (p - 1.0);
}

inline double pow_abs(double x, double r) { return std::pow(std::fabs(x), r); }

// Deterministic 64-bit generator (splitmix64 core). Stream splitting hashes
// the parent state with the stream id, so parallel reductions can draw from
// disjoint deterministic streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Standard normal via Box-Muller (no cached spare; bit-stable).
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Exponential with mean 1.
  double exponential() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    return -std::log(u);
  }

  Rng split(std::uint64_t stream) const {
    Rng child(state_ ^ (0xD1B54A32D192ED03ull + stream * 0x2545F4914F6CDD1Dull));
    child.next_u64();
    return child;
  }

 private:
  std::uint64_t state_;
};

}  // namespace lpspace

#endif  // LPSPACE_CORE_HPP
