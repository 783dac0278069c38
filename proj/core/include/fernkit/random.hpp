#ifndef FERNKIT_RANDOM_HPP
#define FERNKIT_RANDOM_HPP

#include <cstdint>

#include "fernkit/matrix.hpp"

namespace fernkit::rng {

// SplitMix64. Hand-rolled so that seeded runs are byte-identical across
// platforms and standard libraries (std::uniform_int_distribution is not).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi], inclusive. Modulo bias is irrelevant here; only
  // determinism matters.
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

private:
  std::uint64_t state_;
};

// Integer-entry matrix with entries uniform in [lo, hi].
exactlin::RMatrix random_matrix(SplitMix64& rng, std::size_t rows,
                                std::size_t cols, long lo, long hi);

// Invertible n x n matrix with small integer entries (rejection sampling).
exactlin::RMatrix random_invertible(SplitMix64& rng, std::size_t n, long lo,
                                    long hi);

// Invertible upper-triangular matrix: nonzero diagonal in ±[1, diag_hi],
// strict upper part in [lo, hi].
exactlin::RMatrix random_upper_triangular(SplitMix64& rng, std::size_t n,
                                          long lo, long hi, long diag_hi);

// Upper-triangular with unit diagonal, strict upper part in [lo, hi].
exactlin::RMatrix random_upper_unitriangular(SplitMix64& rng, std::size_t n,
                                             long lo, long hi);

}  // namespace fernkit::rng

#endif  // FERNKIT_RANDOM_HPP
