#ifndef FERNKIT_LOCAL_MODEL_HPP
#define FERNKIT_LOCAL_MODEL_HPP

#include <cstddef>

#include "fernkit/matrix.hpp"
#include "fernkit/permutation.hpp"

namespace fernkit::localmodel {

using exactlin::RMatrix;

// Point (g1 B, A, g2 B) of the fiber product of two copies of the
// Grothendieck resolution over gl_n: both conjugates g_i^{-1} A g_i must be
// upper triangular.
struct LocalModelPoint {
  RMatrix g1;
  RMatrix a;
  RMatrix g2;
};

// True iff both g_i^{-1} A g_i are upper triangular.
// Throws SingularityError when a g_i is not invertible.
bool is_point(const RMatrix& g1, const RMatrix& a, const RMatrix& g2);

// Relative position of the two flags; the Bruhat stratum the point lies in.
// Throws PreconditionError when (g1, a, g2) is not a point.
weyl::Permutation stratum(const LocalModelPoint& x);

// True iff diag(g1^{-1} A g1) = reverse(diag(g2^{-1} A g2)): the fiber over
// the antidiagonally matched pairs of the two torus projections.
bool in_kappa_fiber_Tw0(const LocalModelPoint& x);

struct TangentReport {
  weyl::Permutation stratum;
  std::size_t ambient_dim = 0;        // n^2
  std::size_t fiber_tangent_dim = 0;  // solved directly from the linear system
  std::size_t formula_dim = 0;  // n(n-1) + cycle_count(w0 w^-1) + length(w0 w^-1)
  bool distinct_simple = false;
  bool equality_with_Xw0 = false;  // fiber_tangent_dim == n^2
};

// Tangent space of the matched-diagonal fiber at a point with A = 0:
// deformations (h1, A', h2) with the h_i free in the strictly lower
// triangular directions and A' cut out by the two Borel conditions plus the
// reversed-diagonal condition. Throws PreconditionError when A != 0.
TangentReport tangent_fiber_dim(const LocalModelPoint& x);

}  // namespace fernkit::localmodel

#endif  // FERNKIT_LOCAL_MODEL_HPP
