#include "fernkit/phimod.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "fernkit/errors.hpp"

namespace fernkit::phimod {

namespace {

using exactlin::Integer;

void validate_shape(std::size_t n, long p, std::size_t e, std::size_t f,
                    const std::vector<EmbeddingData>& embeddings) {
  if (n == 0) throw DomainError("module rank must be positive");
  if (p < 2) throw DomainError("p must be a prime");
  if (e == 0 || f == 0) throw DomainError("e and f must be positive");
  if (embeddings.size() != e * f) {
    throw DimensionError("expected " + std::to_string(e * f) +
                         " embeddings, got " +
                         std::to_string(embeddings.size()));
  }
  for (const EmbeddingData& emb : embeddings) {
    if (emb.jumps.size() != n) {
      throw DimensionError("each embedding needs exactly n jumps");
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (emb.jumps[i] <= emb.jumps[i - 1]) {
        throw DomainError("filtration jumps must be strictly increasing");
      }
    }
    if (emb.hodge_flag.n() != n) {
      throw DimensionError("Hodge flag ambient dimension must equal the rank");
    }
  }
}

Integer integer_power(long base, std::size_t exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

// All index subsets of {1..n} of the given size, as sorted 1-based lists,
// in ascending bitmask order.
std::vector<std::vector<int>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != static_cast<int>(k)) continue;
    std::vector<int> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(static_cast<int>(i + 1));
    }
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace

FilteredPhiModule FilteredPhiModule::create(
    std::size_t n, long p, std::size_t e, std::size_t f,
    std::vector<Rational> eigenvalues, std::vector<EmbeddingData> embeddings) {
  validate_shape(n, p, e, f, embeddings);
  if (eigenvalues.size() != n) {
    throw DimensionError("expected n eigenvalues");
  }
  const Integer pz(p);
  std::vector<long> valuations;
  valuations.reserve(n);
  for (const Rational& ev : eigenvalues) {
    exactlin::PadicValuation v = exactlin::vp(ev, pz);
    if (v.is_infinite) throw DomainError("eigenvalues must be nonzero");
    valuations.push_back(v.value);
  }
  // Genericity: no ratio of distinct eigenvalues equals 1 or p^f. Ordered
  // pairs cover the reciprocal case p^{-f} as well.
  const Rational pf(integer_power(p, f));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Rational ratio = eigenvalues[i] / eigenvalues[j];
      if (ratio == 1) throw DomainError("eigenvalues must be pairwise distinct");
      if (ratio == pf) {
        throw DomainError("eigenvalue ratio p^f violates genericity");
      }
    }
  }
  FilteredPhiModule d;
  d.n_ = n;
  d.p_ = p;
  d.e_ = e;
  d.f_ = f;
  d.eigenvalues_ = std::move(eigenvalues);
  d.valuations_ = std::move(valuations);
  d.genericity_assumed_ = false;
  d.embeddings_ = std::move(embeddings);
  return d;
}

FilteredPhiModule FilteredPhiModule::from_valuations(
    std::size_t n, long p, std::size_t e, std::size_t f,
    const std::vector<long>& valuations, std::vector<EmbeddingData> embeddings) {
  validate_shape(n, p, e, f, embeddings);
  if (valuations.size() != n) {
    throw DimensionError("expected n eigenvalue valuations");
  }
  // phi_i = p^{v_i} q_i with distinct auxiliary primes q_i != p. Ratios then
  // carry a nontrivial prime-to-p part, so genericity holds automatically.
  std::vector<Rational> eigenvalues;
  eigenvalues.reserve(n);
  Integer q(1);
  for (std::size_t i = 0; i < n; ++i) {
    do {
      mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    } while (q == p);
    Rational ev;
    if (valuations[i] >= 0) {
      ev = Rational(integer_power(p, static_cast<std::size_t>(valuations[i])) *
                    q);
    } else {
      ev = exactlin::make_rational(
          q, integer_power(p, static_cast<std::size_t>(-valuations[i])));
    }
    eigenvalues.push_back(ev);
  }
  FilteredPhiModule d =
      create(n, p, e, f, std::move(eigenvalues), std::move(embeddings));
  d.genericity_assumed_ = true;
  return d;
}

std::vector<Refinement> refinements(const FilteredPhiModule& d) {
  std::vector<int> images(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) images[i] = static_cast<int>(i + 1);
  std::vector<Refinement> out;
  do {
    out.push_back(Refinement{weyl::Permutation(images)});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Subspace coordinate_subspace(std::size_t n, const std::vector<int>& subset) {
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Rational>> vectors;
  for (int i : subset) {
    if (i < 1 || static_cast<std::size_t>(i) > n) {
      throw DomainError("coordinate index out of range");
    }
    if (seen[static_cast<std::size_t>(i - 1)]) {
      throw DomainError("coordinate indices must be distinct");
    }
    seen[static_cast<std::size_t>(i - 1)] = true;
    std::vector<Rational> unit(n, Rational(0));
    unit[static_cast<std::size_t>(i - 1)] = 1;
    vectors.push_back(std::move(unit));
  }
  return Subspace::span_of_vectors(vectors, n);
}

Rational tN(const FilteredPhiModule& d, const std::vector<int>& subset) {
  std::vector<bool> seen(d.n(), false);
  long total = 0;
  for (int i : subset) {
    if (i < 1 || static_cast<std::size_t>(i) > d.n()) {
      throw DomainError("eigenvalue index out of range");
    }
    if (seen[static_cast<std::size_t>(i - 1)]) {
      throw DomainError("eigenvalue indices must be distinct");
    }
    seen[static_cast<std::size_t>(i - 1)] = true;
    total += d.valuations()[static_cast<std::size_t>(i - 1)];
  }
  return Rational(total);
}

Rational tH(const FilteredPhiModule& d, const Subspace& s) {
  if (s.ambient_dim() != d.n()) {
    throw DimensionError("subspace ambient dimension must equal the rank");
  }
  if (s.dim() == 0) throw DomainError("tH is undefined for the zero subspace");
  const std::size_t n = d.n();
  long total = 0;
  for (const EmbeddingData& emb : d.embeddings()) {
    // Sum of induced jumps: each unit increase of dim(s ∩ H_m) over m
    // contributes the jump carried by that step, j_{n-m+1}.
    std::size_t prev = 0;
    for (std::size_t m = 1; m <= n; ++m) {
      const std::size_t dm = exactlin::intersect(s, emb.hodge_flag.step(m)).dim();
      total += static_cast<long>(dm - prev) * emb.jumps[n - m];
      prev = dm;
    }
  }
  return exactlin::make_rational(Integer(total),
                                 Integer(static_cast<long>(d.e())));
}

AdmissibilityVerdict weak_admissibility(const FilteredPhiModule& d) {
  const std::size_t n = d.n();
  std::vector<int> full(n);
  for (std::size_t i = 0; i < n; ++i) full[i] = static_cast<int>(i + 1);

  AdmissibilityVerdict verdict;
  verdict.tN_total = tN(d, full);
  verdict.tH_total = tH(d, Subspace::full(n));
  bool subsets_ok = true;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(static_cast<int>(i + 1));
    }
    const Rational newton = tN(d, subset);
    const Rational hodge = tH(d, coordinate_subspace(n, subset));
    if (newton < hodge) {
      subsets_ok = false;
      verdict.violations.push_back(SubsetComparison{subset, newton, hodge});
    } else if (newton == hodge) {
      verdict.crystalline_subobjects.push_back(subset);
    }
  }
  verdict.is_weakly_admissible =
      subsets_ok && verdict.tN_total == verdict.tH_total;
  return verdict;
}

bool is_irreducible(const FilteredPhiModule& d, bool force) {
  AdmissibilityVerdict verdict = weak_admissibility(d);
  if (!verdict.is_weakly_admissible && !force) {
    throw PreconditionError(
        "irreducibility requires a weakly admissible module (pass force to "
        "report anyway)");
  }
  return verdict.crystalline_subobjects.empty();
}

bool sum_criterion_irreducible(const FilteredPhiModule& d) {
  const std::size_t n = d.n();
  for (std::size_t k = 1; k < n; ++k) {
    // All values attainable as a sum, over the embeddings, of one size-k
    // jump subset each.
    std::set<long> achievable{0};
    for (const EmbeddingData& emb : d.embeddings()) {
      std::set<long> next;
      for (const std::vector<int>& subset : subsets_of_size(n, k)) {
        long s = 0;
        for (int i : subset) s += emb.jumps[static_cast<std::size_t>(i - 1)];
        for (long a : achievable) next.insert(a + s);
      }
      achievable = std::move(next);
    }
    for (const std::vector<int>& subset : subsets_of_size(n, k)) {
      long newton = 0;
      for (int i : subset) {
        newton += d.valuations()[static_cast<std::size_t>(i - 1)];
      }
      if (achievable.count(newton * static_cast<long>(d.e())) > 0) {
        return false;
      }
    }
  }
  return true;
}

std::vector<weyl::Permutation> relative_position(const FilteredPhiModule& d,
                                                 const Refinement& r) {
  if (r.sigma.n() != d.n()) {
    throw DimensionError("refinement degree must equal the rank");
  }
  const Flag refinement_flag = exactlin::flag_of_matrix(r.sigma.matrix());
  std::vector<weyl::Permutation> out;
  out.reserve(d.embeddings().size());
  for (const EmbeddingData& emb : d.embeddings()) {
    out.push_back(weyl::relpos(refinement_flag, emb.hodge_flag));
  }
  return out;
}

bool is_noncritical(const FilteredPhiModule& d, const Refinement& r) {
  const weyl::Permutation w0 = weyl::Permutation::longest(d.n());
  for (const weyl::Permutation& w : relative_position(d, r)) {
    if (!(w == w0)) return false;
  }
  return true;
}

bool is_distinct_transposition_associated(const FilteredPhiModule& d,
                                          const Refinement& r) {
  const weyl::Permutation w0 = weyl::Permutation::longest(d.n());
  for (const weyl::Permutation& w : relative_position(d, r)) {
    if (!weyl::is_distinct_simple_product(w0 * w)) return false;
  }
  return true;
}

OrbitReport cn_orbit_report(const FilteredPhiModule& d, const Refinement& r0) {
  if (!is_noncritical(d, r0)) {
    throw PreconditionError("orbit base refinement must be non-critical");
  }
  OrbitReport report;
  for (const weyl::Permutation& c : weyl::full_cycles(d.n())) {
    // Trivialization-adapted action: relabel the eigenlines through r0,
    // then reorder by the cycle.
    Refinement r{r0.sigma * c};
    OrbitRow row{c, r, relative_position(d, r), is_noncritical(d, r),
                 is_distinct_transposition_associated(d, r)};
    report.rows.push_back(std::move(row));
  }
  return report;
}

bool numerically_noncritical(const FilteredPhiModule& d, const Refinement& r) {
  if (r.sigma.n() != d.n()) {
    throw DimensionError("refinement degree must equal the rank");
  }
  const std::size_t n = d.n();
  const Rational e(static_cast<long>(d.e()));
  Rational slack(0);
  for (std::size_t i = 1; i < n; ++i) {
    // Running Newton-minus-Hodge excess through level i of the refinement.
    long jump_sum = 0;
    for (const EmbeddingData& emb : d.embeddings()) jump_sum += emb.jumps[i - 1];
    slack += Rational(d.valuations()[static_cast<std::size_t>(
                 r.sigma(static_cast<int>(i)) - 1)]) -
             Rational(jump_sum) / e;
    long min_gap = 0;
    bool first = true;
    for (const EmbeddingData& emb : d.embeddings()) {
      const long gap = emb.jumps[i] - emb.jumps[i - 1];
      if (first || gap < min_gap) min_gap = gap;
      first = false;
    }
    if (!(slack < Rational(min_gap) / e)) return false;
  }
  return true;
}

FilteredPhiModule example4() {
  const std::size_t n = 4;
  std::vector<std::vector<Rational>> vectors = {
      {1, 0, 0, 1},
      {0, 1, 1, 0},
      {0, 1, 0, 0},
  };
  std::vector<Subspace> steps;
  std::vector<std::vector<Rational>> prefix;
  for (const std::vector<Rational>& v : vectors) {
    prefix.push_back(v);
    steps.push_back(Subspace::span_of_vectors(prefix, n));
  }
  steps.push_back(Subspace::full(n));
  std::vector<EmbeddingData> embeddings;
  embeddings.push_back(EmbeddingData{{0, 10, 20, 30}, Flag(std::move(steps))});
  return FilteredPhiModule::from_valuations(n, 2, 1, 1, {16, 16, 16, 12},
                                            std::move(embeddings));
}

}  // namespace fernkit::phimod
