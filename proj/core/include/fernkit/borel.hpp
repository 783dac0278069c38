#ifndef FERNKIT_BOREL_HPP
#define FERNKIT_BOREL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "fernkit/matrix.hpp"
#include "fernkit/permutation.hpp"
#include "fernkit/subspace.hpp"

namespace fernkit::borel {

using exactlin::RMatrix;
using exactlin::Subspace;

// The conjugate Borel subalgebra b_g = { M : g M g^{-1} upper triangular },
// a subspace of gl_n flattened to Q^{n^2}; dimension n(n+1)/2.
struct BorelSubalgebra {
  std::size_t n;
  RMatrix conjugator;
  Subspace space;
};

// Throws SingularityError if g is not invertible.
BorelSubalgebra borel_of(const RMatrix& g);

// { M : gMg^{-1} and hMh^{-1} upper triangular, and
//   diag(hMh^{-1}) = reverse(diag(gMg^{-1})) },
// solved as one linear system over Q^{n^2}. Reversal is an involution, so
// the space is symmetric in (g, h); the argument order mirrors the
// convention that the g-side diagonal is the one being reversed.
Subspace graded_w0_intersection(const RMatrix& g, const RMatrix& h);

// g = u * l * s with u invertible upper triangular, l invertible lower
// triangular, s a permutation matrix. Computed by permuted LU elimination
// on g^{-1}; pivot ties are broken by the bottom-most nonzero row, which
// pins the witness normalization below.
struct UlsDecomposition {
  RMatrix u;
  RMatrix l;
  weyl::Permutation s;
};
UlsDecomposition uls_decompose(const RMatrix& g);

// The matrix of the endomorphism pi killing
//   b(e_1), ..., b(e_{j-1}), e_j, b(e_{j+1}), ..., b(e_i), e_{i+1}, ..., e_n
// except pi(e_j) = e_i. Supported on row i, columns j..i, with (i,j)-entry 1.
// Needs b invertible upper triangular and i >= j (1-based).
RMatrix aij_matrix(const RMatrix& b, int i, int j);

// w' = w0 * s where s is the permutation part of uls_decompose(g). When g
// is w0 times an upper-triangular matrix the witness is the identity.
weyl::Permutation envelope_witness(const RMatrix& g);

// Decomposition certificate: b_g must be the sum over the full cycles c of
// the graded intersections against the permutation matrices of c * w'.
struct EnvelopeReport {
  weyl::Permutation witness;
  // Dim of each summand, keyed by the cycle, in full_cycles order.
  std::vector<std::pair<weyl::Permutation, std::size_t>> summand_dims;
  std::size_t total_span_dim = 0;
  bool verified = false;
};

EnvelopeReport verify_envelope(const RMatrix& g,
                               const weyl::Permutation& w_prime);

}  // namespace fernkit::borel

#endif  // FERNKIT_BOREL_HPP
