// Random instance generation: matrices for the property suites and the
// rejection-sampled weakly admissible module generator.

#include <string>

#include "fernkit/errors.hpp"
#include "fernkit/phimod.hpp"
#include "fernkit/random.hpp"
#include "fernkit/run.hpp"

namespace fernkit::rng {

exactlin::RMatrix random_matrix(SplitMix64& rng, std::size_t rows,
                                std::size_t cols, long lo, long hi) {
  exactlin::RMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m.at(i, j) = rng.uniform(lo, hi);
    }
  }
  return m;
}

exactlin::RMatrix random_invertible(SplitMix64& rng, std::size_t n, long lo,
                                    long hi) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    exactlin::RMatrix m = random_matrix(rng, n, n, lo, hi);
    if (exactlin::rank(m) == n) return m;
  }
  throw GeneratorExhaustedError("random_invertible: no invertible sample");
}

exactlin::RMatrix random_upper_triangular(SplitMix64& rng, std::size_t n,
                                          long lo, long hi, long diag_hi) {
  exactlin::RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const long d = rng.uniform(1, diag_hi);
    m.at(i, i) = (rng.uniform(0, 1) == 0) ? d : -d;
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = rng.uniform(lo, hi);
    }
  }
  return m;
}

exactlin::RMatrix random_upper_unitriangular(SplitMix64& rng, std::size_t n,
                                             long lo, long hi) {
  exactlin::RMatrix m = exactlin::RMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      m.at(i, j) = rng.uniform(lo, hi);
    }
  }
  return m;
}

}  // namespace fernkit::rng

namespace fernkit::cli {

using exactlin::RMatrix;
using exactlin::Subspace;

GeneratedModule generate_random_wa(std::size_t n, std::uint64_t seed) {
  if (n < 1 || n > 6) {
    throw DomainError("generate_random_wa supports 1 <= n <= 6");
  }
  rng::SplitMix64 rng(seed);
  const long p = 2;
  constexpr int kBudget = 10000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    // Strictly increasing jumps with gaps in [1, 50].
    std::vector<long> jumps(n);
    jumps[0] = rng.uniform(-20, 20);
    for (std::size_t k = 1; k < n; ++k) {
      jumps[k] = jumps[k - 1] + rng.uniform(1, 50);
    }
    long total = 0;
    for (long j : jumps) total += j;

    // Valuations: split the total jump sum into n integer parts, keeping
    // each part near the mean so admissibility has a reasonable chance.
    std::vector<long> vals(n);
    const long mean = total / static_cast<long>(n);
    long assigned = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      vals[k] = mean + rng.uniform(-5, 5);
      assigned += vals[k];
    }
    vals[n - 1] = total - assigned;

    // Hodge flag: a unipotent twist of the flag opposite to the eigenbasis
    // flag, so that the identity ordering stays non-critical.
    const RMatrix u = rng::random_upper_unitriangular(rng, n, -4, 4);
    const RMatrix h = u * weyl::Permutation::longest(n).matrix();
    std::vector<phimod::EmbeddingData> embeddings;
    embeddings.push_back(
        phimod::EmbeddingData{jumps, exactlin::flag_of_matrix(h)});

    phimod::FilteredPhiModule d = phimod::FilteredPhiModule::from_valuations(
        n, p, 1, 1, vals, std::move(embeddings));
    if (phimod::weak_admissibility(d).is_weakly_admissible) {
      return GeneratedModule{std::move(d), attempt};
    }
  }
  throw GeneratorExhaustedError(
      "generate_random_wa: rejection budget exhausted for n = " +
      std::to_string(n) + ", seed = " + std::to_string(seed));
}

}  // namespace fernkit::cli
