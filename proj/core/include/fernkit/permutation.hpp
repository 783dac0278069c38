#ifndef FERNKIT_PERMUTATION_HPP
#define FERNKIT_PERMUTATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fernkit/matrix.hpp"
#include "fernkit/subspace.hpp"

namespace fernkit::weyl {

// Element of the symmetric group S_n in one-line notation: images[i] is
// w(i+1), with 1-based values. Composition is function composition,
// (u*w)(i) = u(w(i)), matching column-permutation of matrices:
// matrix(u) * matrix(w) = matrix(u*w).
class Permutation {
public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);
  // The order-reversing permutation i -> n+1-i; an involution and the
  // maximum of the Bruhat order.
  static Permutation longest(std::size_t n);
  // Adjacent transposition s_i = (i, i+1), 1 <= i <= n-1.
  static Permutation simple(std::size_t n, int i);
  // The cycle (i, i-1, ..., j+1, j): i -> i-1 -> ... -> j -> i. Needs i >= j.
  static Permutation descending_cycle(std::size_t n, int i, int j);
  // Parses "(2 1)(4 3)" or "id"/"()" against a fixed n.
  static Permutation from_cycles(const std::string& text, std::size_t n);

  std::size_t n() const { return images_.size(); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  friend Permutation operator*(const Permutation& u, const Permutation& w);

  bool operator==(const Permutation&) const = default;
  bool is_identity() const;

  // Permutation matrix: column j is e_{w(j)}.
  exactlin::RMatrix matrix() const;

  // Disjoint-cycle rendering, fixed points omitted; identity prints "id".
  std::string cycle_string() const;

private:
  std::vector<int> images_;
};

// For deterministic containers and reports.
bool lexicographic_less(const Permutation& a, const Permutation& b);

// Inversion count; equals the length of any reduced word.
std::size_t length(const Permutation& w);

// The cycles (i, i-1, ..., j) for i >= j, deduplicated (every (i,i) is the
// identity). Cardinality 1 + n(n-1)/2. Deterministic order: identity first,
// then increasing length, then increasing j.
std::vector<Permutation> full_cycles(std::size_t n);

// Bruhat order via the rank-matrix criterion:
// u <= w iff for all i,j: #{a <= i : u(a) <= j} >= #{a <= i : w(a) <= j}.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// A reduced word (letters are simple-reflection indices, 1-based), found by
// repeatedly removing the first descent; its size equals length(w).
std::vector<int> reduced_word(const Permutation& w);

// Distinct letters appearing in a reduced word of w.
std::vector<int> support(const Permutation& w);

// True iff w is a product of pairwise-distinct simple reflections. Such a
// product is automatically reduced, so the test is length(w) == |support(w)|.
bool is_distinct_simple_product(const Permutation& w);

// Number of cycles including fixed points; the dimension of the fixed space
// of w acting on the diagonal matrices.
std::size_t cycle_count(const Permutation& w);

// The unique w with (F, G) in the GL_n-orbit of (E, w·E), where E is the
// standard flag: w(j) = i iff the second difference of
// d[i][j] = dim(F_i ∩ G_j) equals 1 at (i, j). Opposite flags give the
// longest element; relpos(w1·E, w2·E) = w1^{-1} w2.
Permutation relpos(const exactlin::Flag& f, const exactlin::Flag& g);

}  // namespace fernkit::weyl

#endif  // FERNKIT_PERMUTATION_HPP
