#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lcj {

// Deterministic random source. The engine is std::mt19937_64 (fully specified
// by the standard); the value mappings are our own so that streams are
// identical across platforms and library versions. Randomized generators take
// explicit seeds; there is no global state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53 bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi], inclusive; hi >= lo.
  std::uint64_t next_index(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t span = hi - lo + 1;
    // rejection-free modulo is fine here: span is tiny relative to 2^64
    return lo + next_u64() % span;
  }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Standard normal via Box-Muller; one spare value cached.
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do { u1 = next_double(); } while (u1 <= 0.0);
    double u2 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925287 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Derive a stream for a sub-task; restart/index i of a seeded run must not
  // depend on how many draws earlier sub-tasks consumed.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace lcj
