#include "fernkit/subspace.hpp"

#include <string>

#include "fernkit/errors.hpp"

namespace fernkit::exactlin {

Subspace Subspace::zero(std::size_t ambient) {
  return Subspace(ambient, RMatrix(0, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  return Subspace(ambient, RMatrix::identity(ambient));
}

Subspace Subspace::span_of_rows(const RMatrix& rows, std::size_t ambient) {
  if (rows.cols() != ambient && rows.rows() != 0) {
    throw DimensionError("span_of_rows: vectors do not live in Q^" +
                         std::to_string(ambient));
  }
  auto [reduced, rk] = rref(rows);
  RMatrix basis(rk, ambient);
  for (std::size_t i = 0; i < rk; ++i) {
    for (std::size_t j = 0; j < ambient; ++j) {
      basis.at(i, j) = reduced.at(i, j);
    }
  }
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::span_of_vectors(
    const std::vector<std::vector<Rational>>& vs, std::size_t ambient) {
  RMatrix rows(vs.size(), ambient);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != ambient) {
      throw DimensionError("span_of_vectors: vector length mismatch");
    }
    for (std::size_t j = 0; j < ambient; ++j) {
      rows.at(i, j) = vs[i][j];
    }
  }
  return span_of_rows(rows, ambient);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) {
    throw DimensionError("contains: vector length mismatch");
  }
  // Reduce v against the RREF basis; membership iff the residue is zero.
  std::vector<Rational> residue = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t pivot = 0;
    while (pivot < ambient_ && basis_.at(r, pivot) == 0) {
      ++pivot;
    }
    if (pivot == ambient_) continue;
    const Rational factor = residue[pivot];  // pivot entry of basis row is 1
    if (factor == 0) continue;
    for (std::size_t j = pivot; j < ambient_; ++j) {
      residue[j] -= factor * basis_.at(r, j);
    }
  }
  for (const Rational& x : residue) {
    if (x != 0) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) {
    throw DimensionError("contains: ambient mismatch");
  }
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) {
    std::vector<Rational> row(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) {
      row[j] = other.basis_.at(r, j);
    }
    if (!contains(row)) return false;
  }
  return true;
}

Subspace kernel(const RMatrix& m) {
  const std::size_t n = m.cols();
  auto [reduced, rk] = rref(m);
  // Locate pivot columns.
  std::vector<bool> is_pivot(n, false);
  std::vector<std::size_t> pivot_col_of_row(rk);
  for (std::size_t r = 0; r < rk; ++r) {
    std::size_t c = 0;
    while (c < n && reduced.at(r, c) == 0) {
      ++c;
    }
    pivot_col_of_row[r] = c;
    is_pivot[c] = true;
  }
  // One kernel vector per free column.
  RMatrix vectors(n - rk, n);
  std::size_t k = 0;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    vectors.at(k, free_col) = 1;
    for (std::size_t r = 0; r < rk; ++r) {
      vectors.at(k, pivot_col_of_row[r]) = -reduced.at(r, free_col);
    }
    ++k;
  }
  return Subspace::span_of_rows(vectors, n);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("intersect: ambient mismatch");
  }
  const std::size_t ambient = a.ambient_dim();
  const std::size_t ra = a.dim();
  const std::size_t rb = b.dim();
  if (ra == 0 || rb == 0) return Subspace::zero(ambient);
  // x ∈ A ∩ B iff x = u·basis(A) = -w·basis(B) for (u, w) in the kernel of
  // the ambient × (ra + rb) matrix whose columns are the basis vectors.
  RMatrix columns(ambient, ra + rb);
  for (std::size_t j = 0; j < ambient; ++j) {
    for (std::size_t i = 0; i < ra; ++i) {
      columns.at(j, i) = a.basis().at(i, j);
    }
    for (std::size_t i = 0; i < rb; ++i) {
      columns.at(j, ra + i) = b.basis().at(i, j);
    }
  }
  const Subspace coeffs = kernel(columns);
  RMatrix vectors(coeffs.dim(), ambient);
  for (std::size_t k = 0; k < coeffs.dim(); ++k) {
    for (std::size_t i = 0; i < ra; ++i) {
      const Rational& u = coeffs.basis().at(k, i);
      if (u == 0) continue;
      for (std::size_t j = 0; j < ambient; ++j) {
        vectors.at(k, j) += u * a.basis().at(i, j);
      }
    }
  }
  return Subspace::span_of_rows(vectors, ambient);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionError("sum: ambient mismatch");
  }
  const std::size_t ambient = a.ambient_dim();
  RMatrix stacked(a.dim() + b.dim(), ambient);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < ambient; ++j) {
      stacked.at(i, j) = a.basis().at(i, j);
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < ambient; ++j) {
      stacked.at(a.dim() + i, j) = b.basis().at(i, j);
    }
  }
  return Subspace::span_of_rows(stacked, ambient);
}

Flag::Flag(std::vector<Subspace> steps) : steps_(std::move(steps)) {
  const std::size_t n = steps_.size();
  if (n == 0) {
    throw DomainError("flag must have at least one step");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (steps_[i].ambient_dim() != n) {
      throw DimensionError("flag step ambient must equal the step count");
    }
    if (steps_[i].dim() != i + 1) {
      throw DomainError("flag step " + std::to_string(i + 1) +
                        " has dimension " + std::to_string(steps_[i].dim()));
    }
    if (i > 0 && !steps_[i].contains(steps_[i - 1])) {
      throw DomainError("flag steps are not nested");
    }
  }
}

Flag flag_of_matrix(const RMatrix& g) {
  g.inverse_or_throw("flag_of_matrix");
  const std::size_t n = g.rows();
  std::vector<Subspace> steps;
  steps.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    RMatrix rows(i, n);
    for (std::size_t c = 0; c < i; ++c) {
      for (std::size_t r = 0; r < n; ++r) {
        rows.at(c, r) = g.at(r, c);
      }
    }
    steps.push_back(Subspace::span_of_rows(rows, n));
  }
  return Flag(std::move(steps));
}

}  // namespace fernkit::exactlin
