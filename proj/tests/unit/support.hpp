#pragma once

// Seeded generators shared by the property tests.

#include "odo/lattice.hpp"

#include <cstdint>

namespace odo::test {

// SplitMix64: small, fast, and identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

inline IntMatrix random_matrix(Rng& rng, std::size_t d, long bound) {
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = Int(rng.range(-bound, bound));
  return m;
}

inline IntMatrix random_nonsingular(Rng& rng, std::size_t d, long bound) {
  while (true) {
    IntMatrix m = random_matrix(rng, d, bound);
    if (determinant(m) != 0) return m;
  }
}

inline IntVector random_vector(Rng& rng, std::size_t d, long bound) {
  IntVector v;
  for (std::size_t i = 0; i < d; ++i) v.push_back(Int(rng.range(-bound, bound)));
  return v;
}

}  // namespace odo::test
