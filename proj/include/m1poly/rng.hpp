#pragma once

#include <cstdint>

namespace m1poly {

// Counter-based generator (splitmix64 finalizer applied to seed + counter).
// Output i depends only on (seed, i), so seeded sweeps reproduce
// bit-for-bit across platforms and runs; no hidden stream state beyond the
// counter itself.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1), 53-bit resolution
  double next() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next(); }

  int next_sign() { return (next_u64() & 1ull) ? 1 : -1; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace m1poly
