#include "fernkit/local_model.hpp"

#include <vector>

#include "fernkit/borel.hpp"
#include "fernkit/errors.hpp"
#include "fernkit/subspace.hpp"

namespace fernkit::localmodel {

using exactlin::Rational;

bool is_point(const RMatrix& g1, const RMatrix& a, const RMatrix& g2) {
  const RMatrix g1inv = g1.inverse_or_throw("is_point");
  const RMatrix g2inv = g2.inverse_or_throw("is_point");
  return (g1inv * a * g1).is_upper_triangular() &&
         (g2inv * a * g2).is_upper_triangular();
}

weyl::Permutation stratum(const LocalModelPoint& x) {
  if (!is_point(x.g1, x.a, x.g2)) {
    throw PreconditionError("stratum: not a point of the local model");
  }
  return weyl::relpos(exactlin::flag_of_matrix(x.g1),
                      exactlin::flag_of_matrix(x.g2));
}

bool in_kappa_fiber_Tw0(const LocalModelPoint& x) {
  if (!is_point(x.g1, x.a, x.g2)) {
    throw PreconditionError("in_kappa_fiber_Tw0: not a point");
  }
  const RMatrix g1inv = x.g1.inverse_or_throw("in_kappa_fiber_Tw0");
  const RMatrix g2inv = x.g2.inverse_or_throw("in_kappa_fiber_Tw0");
  const std::vector<Rational> d1 = (g1inv * x.a * x.g1).diagonal();
  const std::vector<Rational> d2 = (g2inv * x.a * x.g2).diagonal();
  const std::size_t n = d1.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (d1[k] != d2[n - 1 - k]) return false;
  }
  return true;
}

TangentReport tangent_fiber_dim(const LocalModelPoint& x) {
  if (!x.a.is_zero()) {
    throw PreconditionError(
        "tangent_fiber_dim: only the A = 0 case is supported");
  }
  const std::size_t n = x.g1.rows();
  const RMatrix g1inv = x.g1.inverse_or_throw("tangent_fiber_dim");
  const RMatrix g2inv = x.g2.inverse_or_throw("tangent_fiber_dim");

  // At A = 0 the flag coordinates move freely in the strictly lower
  // triangular charts (n(n-1)/2 each) and the A-direction is constrained by
  // g_i^{-1} A' g_i upper triangular plus the reversed-diagonal matching;
  // that is exactly a graded intersection for the pair (g1^{-1}, g2^{-1}).
  const exactlin::Subspace a_space =
      borel::graded_w0_intersection(g1inv, g2inv);
  const std::size_t fiber_dim = n * (n - 1) + a_space.dim();

  const weyl::Permutation w = stratum(x);
  const weyl::Permutation v = weyl::Permutation::longest(n) * w.inverse();
  const std::size_t formula =
      n * (n - 1) + weyl::cycle_count(v) + weyl::length(v);

  TangentReport report{w, n * n, fiber_dim, formula,
                       weyl::is_distinct_simple_product(v),
                       fiber_dim == n * n};
  return report;
}

}  // namespace fernkit::localmodel
