#include "fernkit/borel.hpp"

#include <map>

#include "fernkit/errors.hpp"

namespace fernkit::borel {

using exactlin::Rational;

BorelSubalgebra borel_of(const RMatrix& g) {
  const RMatrix ginv = g.inverse_or_throw("borel_of");
  const std::size_t n = g.rows();
  // b_g is spanned by g^{-1} E_{rc} g for r <= c;
  // (g^{-1} E_{rc} g)[a][b] = ginv[a][r] * g[c][b].
  RMatrix rows(n * (n + 1) / 2, n * n);
  std::size_t k = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          rows.at(k, a * n + b) = ginv.at(a, r) * g.at(c, b);
        }
      }
      ++k;
    }
  }
  return BorelSubalgebra{n, g, Subspace::span_of_rows(rows, n * n)};
}

namespace {

// Adds to a constraint row the linear form "entry (r, c) of gMg^{-1}" in
// the n^2 unknowns M[a][b]: coefficient of M[a][b] is g[r][a] * ginv[b][c].
void append_entry_row(RMatrix& constraints, std::size_t row_index,
                      const RMatrix& g, const RMatrix& ginv, std::size_t r,
                      std::size_t c, const Rational& scale) {
  const std::size_t n = g.rows();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      constraints.at(row_index, a * n + b) += scale * g.at(r, a) * ginv.at(b, c);
    }
  }
}

}  // namespace

Subspace graded_w0_intersection(const RMatrix& g, const RMatrix& h) {
  if (g.rows() != h.rows() || !g.is_square() || !h.is_square()) {
    throw DimensionError("graded_w0_intersection: size mismatch");
  }
  const RMatrix ginv = g.inverse_or_throw("graded_w0_intersection");
  const RMatrix hinv = h.inverse_or_throw("graded_w0_intersection");
  const std::size_t n = g.rows();
  const std::size_t strict = n * (n - 1) / 2;
  RMatrix constraints(2 * strict + n, n * n);
  std::size_t row = 0;
  // Strictly lower entries of both conjugates vanish.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      append_entry_row(constraints, row, g, ginv, r, c, 1);
      ++row;
      append_entry_row(constraints, row, h, hinv, r, c, 1);
      ++row;
    }
  }
  // diag(hMh^{-1})[k] - diag(gMg^{-1})[n-1-k] = 0.
  for (std::size_t k = 0; k < n; ++k) {
    append_entry_row(constraints, row, h, hinv, k, k, 1);
    append_entry_row(constraints, row, g, ginv, n - 1 - k, n - 1 - k, -1);
    ++row;
  }
  return exactlin::kernel(constraints);
}

UlsDecomposition uls_decompose(const RMatrix& g) {
  const std::size_t n = g.rows();
  RMatrix a = g.inverse_or_throw("uls_decompose");
  // Permuted LU on g^{-1}: find pivots column by column, eliminating below.
  // Choosing the bottom-most nonzero row makes s = w0 whenever g is w0
  // times an upper-triangular matrix, so the envelope witness can be the
  // identity in that case.
  std::vector<bool> used(n, false);
  std::vector<std::size_t> pivot_of_col(n);
  RMatrix mult(n, n);  // mult[r][k]: multiplier removing column k from row r
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (!used[r] && a.at(r, k) != 0) pivot = r;
    }
    if (pivot == n) {
      throw SingularityError("uls_decompose: elimination broke down");
    }
    pivot_of_col[k] = pivot;
    used[pivot] = true;
    for (std::size_t r = 0; r < n; ++r) {
      if (used[r] || a.at(r, k) == 0) continue;
      const Rational m = a.at(r, k) / a.at(pivot, k);
      mult.at(r, k) = m;
      for (std::size_t j = k; j < n; ++j) {
        a.at(r, j) -= m * a.at(pivot, j);
      }
    }
  }
  // P g^{-1} = L U with row k of P g^{-1} being row pivot_of_col[k] of g^{-1}.
  RMatrix upper(n, n);
  RMatrix lower = RMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      upper.at(k, j) = a.at(pivot_of_col[k], j);
    }
    for (std::size_t kk = 0; kk < k; ++kk) {
      lower.at(k, kk) = mult.at(pivot_of_col[k], kk);
    }
  }
  // s maps pivot_of_col[k]+1 to k+1; its matrix is P. Then
  // g^{-1} = P^{-1} L U and g = U^{-1} L^{-1} P.
  std::vector<int> images(n);
  for (std::size_t k = 0; k < n; ++k) {
    images[pivot_of_col[k]] = static_cast<int>(k + 1);
  }
  weyl::Permutation s(std::move(images));
  return UlsDecomposition{upper.inverse_or_throw("uls_decompose"),
                          lower.inverse_or_throw("uls_decompose"),
                          std::move(s)};
}

RMatrix aij_matrix(const RMatrix& b, int i, int j) {
  const std::size_t n = b.rows();
  if (!b.is_square() || !b.is_upper_triangular()) {
    throw DomainError("aij_matrix: b must be upper triangular");
  }
  b.inverse_or_throw("aij_matrix");
  if (j < 1 || i < j || static_cast<std::size_t>(i) > n) {
    throw DomainError("aij_matrix: needs 1 <= j <= i <= n");
  }
  // pi(e_l) = x_l e_i for j <= l <= i; killing b(e_l) for j < l <= i forces
  // the recursion below. All other basis images are zero.
  std::vector<Rational> x(static_cast<std::size_t>(i - j + 1));
  x[0] = 1;
  for (int l = j + 1; l <= i; ++l) {
    Rational acc(0);
    for (int m = j; m < l; ++m) {
      acc += b.at(m - 1, l - 1) * x[static_cast<std::size_t>(m - j)];
    }
    x[static_cast<std::size_t>(l - j)] = -acc / b.at(l - 1, l - 1);
  }
  RMatrix out(n, n);
  for (int l = j; l <= i; ++l) {
    out.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(l - 1)) =
        x[static_cast<std::size_t>(l - j)];
  }
  return out;
}

weyl::Permutation envelope_witness(const RMatrix& g) {
  const UlsDecomposition uls = uls_decompose(g);
  return weyl::Permutation::longest(g.rows()) * uls.s;
}

EnvelopeReport verify_envelope(const RMatrix& g,
                               const weyl::Permutation& w_prime) {
  const BorelSubalgebra bg = borel_of(g);
  const std::size_t n = bg.n;
  EnvelopeReport report{w_prime, {}, 0, false};
  Subspace span = Subspace::zero(n * n);
  for (const weyl::Permutation& c : weyl::full_cycles(n)) {
    const weyl::Permutation w = c * w_prime;
    const Subspace summand = graded_w0_intersection(w.matrix(), g);
    report.summand_dims.emplace_back(c, summand.dim());
    span = sum(span, summand);
  }
  report.total_span_dim = span.dim();
  report.verified = (span == bg.space);
  return report;
}

}  // namespace fernkit::borel
