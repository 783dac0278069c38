#ifndef FERNKIT_PHIMOD_HPP
#define FERNKIT_PHIMOD_HPP

#include <cstddef>
#include <vector>

#include "fernkit/permutation.hpp"
#include "fernkit/rational.hpp"
#include "fernkit/subspace.hpp"

namespace fernkit::phimod {

using exactlin::Flag;
using exactlin::Rational;
using exactlin::Subspace;

// One embedding: strictly increasing filtration jumps j_1 < ... < j_n and
// the Hodge flag in eigenbasis coordinates. Step m of the flag is the
// filtration step carrying the m largest jumps; step 1 is the deepest line.
struct EmbeddingData {
  std::vector<long> jumps;
  Flag hodge_flag;
};

// Filtered module of rank n with a diagonalized linearized Frobenius:
// distinct eigenvalues phi_1..phi_n in the fixed eigenbasis f_1..f_n, prime
// p, invariants (e, f), and one EmbeddingData per embedding (e*f of them).
//
// Genericity (enforced at construction when eigenvalues are explicit):
// eigenvalues pairwise distinct with phi_i/phi_j not in {1, p^f}. Under it
// the Frobenius-stable subspaces are exactly the 2^n coordinate subspaces.
class FilteredPhiModule {
public:
  // Validates genericity from the exact eigenvalues.
  static FilteredPhiModule create(std::size_t n, long p, std::size_t e,
                                  std::size_t f,
                                  std::vector<Rational> eigenvalues,
                                  std::vector<EmbeddingData> embeddings);

  // Synthesizes exact eigenvalues p^{v_i} q_i with distinct auxiliary
  // primes q_i != p, so every downstream computation stays exact. Marked as
  // genericity "assumed" because the caller supplied only valuations.
  static FilteredPhiModule from_valuations(std::size_t n, long p,
                                           std::size_t e, std::size_t f,
                                           const std::vector<long>& valuations,
                                           std::vector<EmbeddingData> embeddings);

  std::size_t n() const { return n_; }
  long p() const { return p_; }
  std::size_t e() const { return e_; }
  std::size_t f() const { return f_; }
  const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }
  // v_p of each eigenvalue; exact integers.
  const std::vector<long>& valuations() const { return valuations_; }
  bool genericity_assumed() const { return genericity_assumed_; }
  const std::vector<EmbeddingData>& embeddings() const { return embeddings_; }

private:
  FilteredPhiModule() = default;

  std::size_t n_ = 0;
  long p_ = 2;
  std::size_t e_ = 1;
  std::size_t f_ = 1;
  std::vector<Rational> eigenvalues_;
  std::vector<long> valuations_;
  bool genericity_assumed_ = false;
  std::vector<EmbeddingData> embeddings_;
};

// A refinement is an ordering sigma of the eigenvalues; its flag has
// F_i = span{ f_{sigma(1)}, ..., f_{sigma(i)} }, Frobenius-stable by
// construction.
struct Refinement {
  weyl::Permutation sigma;
};

// All n! refinements, ordered lexicographically by one-line notation.
std::vector<Refinement> refinements(const FilteredPhiModule& d);

// The coordinate subspace span{ f_i : i in subset }, 1-based indices.
Subspace coordinate_subspace(std::size_t n, const std::vector<int>& subset);

// Newton number of a coordinate subset: sum of the eigenvalue valuations.
Rational tN(const FilteredPhiModule& d, const std::vector<int>& subset);

// Hodge number of a nonzero subspace: (1/e) times the sum over embeddings
// of the induced filtration jumps, read off the intersection profile with
// the Hodge flag. Throws DomainError for the zero subspace.
Rational tH(const FilteredPhiModule& d, const Subspace& s);

struct SubsetComparison {
  std::vector<int> subset;
  Rational newton;
  Rational hodge;
};

struct AdmissibilityVerdict {
  Rational tN_total;
  Rational tH_total;
  bool is_weakly_admissible = false;
  // Nonempty proper subsets with tN < tH, in bitmask order.
  std::vector<SubsetComparison> violations;
  // Nonempty proper subsets with tN = tH: the crystalline subobjects.
  std::vector<std::vector<int>> crystalline_subobjects;
};

// Checks tN(full) = tH(full) and tN >= tH on every nonempty proper
// coordinate subset (the Frobenius-stable subspaces, by genericity).
AdmissibilityVerdict weak_admissibility(const FilteredPhiModule& d);

// True iff there is no nonzero proper crystalline subobject. Requires d
// weakly admissible unless force is set. Throws PreconditionError.
bool is_irreducible(const FilteredPhiModule& d, bool force = false);

// Sufficient irreducibility test that never inspects the flags: no subset
// valuation sum may equal (1/e) times any equal-size jump-subset sum
// aggregated over the embeddings. Implies is_irreducible.
bool sum_criterion_irreducible(const FilteredPhiModule& d);

// Per embedding, the relative position of the refinement flag and the
// Hodge flag.
std::vector<weyl::Permutation> relative_position(const FilteredPhiModule& d,
                                                 const Refinement& r);

// True iff the relative position is the longest element at every
// embedding: the refinement flag is opposite to the Hodge flag everywhere.
bool is_noncritical(const FilteredPhiModule& d, const Refinement& r);

// True iff w0 * relative_position is a product of pairwise-distinct simple
// reflections at every embedding.
bool is_distinct_transposition_associated(const FilteredPhiModule& d,
                                          const Refinement& r);

struct OrbitRow {
  weyl::Permutation cycle;
  Refinement refinement;
  std::vector<weyl::Permutation> relative_positions;
  bool noncritical = false;
  bool distinct_transposition = false;
};

struct OrbitReport {
  std::vector<OrbitRow> rows;
};

// The full-cycle orbit through a non-critical refinement r0. The action is
// through the ordering trivialization based at r0: cycle c sends r0 to the
// ordering sigma = r0.sigma * c (relabel eigenlines by r0 first, then
// reorder by c). Every row of the table is distinct-transposition
// associated. Throws PreconditionError when r0 is critical.
OrbitReport cn_orbit_report(const FilteredPhiModule& d, const Refinement& r0);

// Numerical test: for every i < n the running Newton-minus-Hodge slack of
// the refinement must stay strictly below (1/e) times the smallest jump gap
// at level i. On weakly admissible modules it implies is_noncritical; the
// converse fails.
bool numerically_noncritical(const FilteredPhiModule& d, const Refinement& r);

// The bundled rank-4 worked example: p = 2, valuations (16, 16, 16, 12),
// jumps (0, 10, 20, 30), Hodge flag <f1+f4> ⊂ <f1+f4, f2+f3> ⊂
// <f2, f3, f1+f4>.
FilteredPhiModule example4();

}  // namespace fernkit::phimod

#endif  // FERNKIT_PHIMOD_HPP
