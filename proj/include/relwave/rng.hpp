#pragma once

// Seeded randomness for the verification suites. splitmix64 underneath so
// that a (suite, seed) pair replays the identical stream on any platform;
// std distributions are avoided on purpose, their output is
// implementation-defined.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string_view>

namespace relwave {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  std::complex<double> complex_in_disk(double radius = 1.0) {
    // rejection keeps the distribution rotation-invariant
    for (;;) {
      const double re = uniform(-1.0, 1.0);
      const double im = uniform(-1.0, 1.0);
      if (re * re + im * im <= 1.0) return {radius * re, radius * im};
    }
  }

  Eigen::Vector3d vec3(double lo, double hi) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  // nonzero wavevector with |k| in [kmin, kmax]
  Eigen::Vector3d wavevector(double kmin, double kmax) {
    for (;;) {
      const Eigen::Vector3d k = vec3(-1.0, 1.0);
      const double n = k.norm();
      if (n > 1e-3 && n <= 1.0) return (uniform(kmin, kmax) / n) * k;
    }
  }

  int index(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

// FNV-1a, used to derive per-check sub-seeds so check order never matters.
inline std::uint64_t hash_name(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : name) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline Rng sub_rng(std::uint64_t seed, std::string_view check_name) {
  return Rng(seed ^ hash_name(check_name));
}

}  // namespace relwave
