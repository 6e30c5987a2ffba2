#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace hoops {

// SplitMix64 step, used for deriving child seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Seeded RNG with hand-rolled distributions so that streams are identical
// across standard library implementations, not just across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform in (0, 1].
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  // Standard normal via Box-Muller; one value per call.
  double normal() {
    double u = uniform();
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Knuth's method; fine for the moderate rates used here.
  int poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    double limit = std::exp(-lambda);
    double prod = uniform();
    int n = 0;
    while (prod > limit) {
      prod *= uniform();
      ++n;
    }
    return n;
  }

  // Independent child stream, stable in (construction seed, tag).
  Rng derive(std::uint64_t tag) const {
    return Rng(splitmix64(splitmix64(seed_) ^ splitmix64(tag)));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hoops
