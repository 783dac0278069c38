#ifndef FERNKIT_SUBSPACE_HPP
#define FERNKIT_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "fernkit/matrix.hpp"

namespace fernkit::exactlin {

// Linear subspace of Q^ambient, stored as a reduced-row-echelon basis with
// no zero rows. RREF is unique, so two subspaces are equal as sets iff
// their basis matrices are identical; equality is syntactic.
class Subspace {
public:
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  // Row span of an arbitrary matrix (rows need not be independent).
  static Subspace span_of_rows(const RMatrix& rows, std::size_t ambient);
  static Subspace span_of_vectors(const std::vector<std::vector<Rational>>& vs,
                                  std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  // dim x ambient, in reduced row-echelon form.
  const RMatrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const = default;

private:
  Subspace(std::size_t ambient, RMatrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_ = 0;
  RMatrix basis_;
};

// Column-vector kernel of m, as a subspace of Q^cols: { v : m v = 0 }.
// dim kernel + rank = cols.
Subspace kernel(const RMatrix& m);

// Set-theoretic intersection. Throws DimensionError on ambient mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

// Smallest subspace containing both. Grassmann:
// dim a + dim b = dim(a ∩ b) + dim(a + b).
Subspace sum(const Subspace& a, const Subspace& b);

// Complete flag 0 ⊊ V_1 ⊊ ... ⊊ V_n of Q^n with dim V_i = i.
class Flag {
public:
  // steps[i] must have dim i+1 and be contained in steps[i+1].
  explicit Flag(std::vector<Subspace> steps);

  std::size_t n() const { return steps_.size(); }
  // 1-based: step(i) has dimension i, for 1 <= i <= n.
  const Subspace& step(std::size_t i) const { return steps_[i - 1]; }

  bool operator==(const Flag& other) const = default;

private:
  std::vector<Subspace> steps_;
};

// V_i = span of the first i columns of g. Right multiplication by an
// invertible upper-triangular matrix does not change the flag.
// Throws SingularityError when g is not invertible.
Flag flag_of_matrix(const RMatrix& g);

}  // namespace fernkit::exactlin

#endif  // FERNKIT_SUBSPACE_HPP
