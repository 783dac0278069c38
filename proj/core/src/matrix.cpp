#include "fernkit/matrix.hpp"

#include "fernkit/errors.hpp"

namespace fernkit::exactlin {

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

RMatrix RMatrix::operator+(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix addition shape mismatch");
  }
  RMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = entries_[k] + other.entries_[k];
  }
  return out;
}

RMatrix RMatrix::operator-(const RMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionError("matrix subtraction shape mismatch");
  }
  RMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = entries_[k] - other.entries_[k];
  }
  return out;
}

RMatrix RMatrix::operator*(const RMatrix& other) const {
  if (cols_ != other.rows_) {
    throw DimensionError("matrix product shape mismatch");
  }
  RMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out.at(i, j) += a * other.at(k, j);
      }
    }
  }
  return out;
}

RMatrix RMatrix::operator*(const Rational& scalar) const {
  RMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    out.entries_[k] = entries_[k] * scalar;
  }
  return out;
}

RMatrix RMatrix::transpose() const {
  RMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.at(j, i) = at(i, j);
    }
  }
  return out;
}

std::vector<Rational> RMatrix::diagonal() const {
  if (!is_square()) {
    throw DimensionError("diagonal of a non-square matrix");
  }
  std::vector<Rational> d(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    d[i] = at(i, i);
  }
  return d;
}

Rational RMatrix::trace() const {
  Rational t(0);
  for (const Rational& d : diagonal()) {
    t += d;
  }
  return t;
}

bool RMatrix::is_zero() const {
  for (const Rational& x : entries_) {
    if (x != 0) return false;
  }
  return true;
}

bool RMatrix::is_upper_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 1; i < rows_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (at(i, j) != 0) return false;
    }
  }
  return true;
}

bool RMatrix::is_lower_triangular() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(i, j) != 0) return false;
    }
  }
  return true;
}

std::optional<RMatrix> RMatrix::inverse() const {
  if (!is_square()) return std::nullopt;
  const std::size_t n = rows_;
  // Row-reduce [A | I]; A invertible iff the left block reaches I.
  RMatrix work(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      work.at(i, j) = at(i, j);
    }
    work.at(i, n + i) = 1;
  }
  auto [reduced, rk] = rref(work);
  if (rk < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reduced.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
    }
  }
  RMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      inv.at(i, j) = reduced.at(i, n + j);
    }
  }
  return inv;
}

RMatrix RMatrix::inverse_or_throw(const char* context) const {
  auto inv = inverse();
  if (!inv) {
    throw SingularityError(std::string(context) +
                           ": matrix is singular or not square");
  }
  return *std::move(inv);
}

RMatrix RMatrix::from_flat(const std::vector<Rational>& flat, std::size_t n) {
  if (flat.size() != n * n) {
    throw DimensionError("flattened matrix has wrong length");
  }
  RMatrix m(n, n);
  for (std::size_t k = 0; k < flat.size(); ++k) {
    m.at(k / n, k % n) = flat[k];
  }
  return m;
}

std::pair<RMatrix, std::size_t> rref(const RMatrix& m) {
  RMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t pr = pivot_row;
    while (pr < rows && a.at(pr, col) == 0) {
      ++pr;
    }
    if (pr == rows) continue;
    if (pr != pivot_row) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(a.at(pr, j), a.at(pivot_row, j));
      }
    }
    const Rational inv_pivot = 1 / Rational(a.at(pivot_row, col));
    for (std::size_t j = col; j < cols; ++j) {
      a.at(pivot_row, j) *= inv_pivot;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a.at(r, col) == 0) continue;
      const Rational factor = a.at(r, col);
      for (std::size_t j = col; j < cols; ++j) {
        a.at(r, j) -= factor * a.at(pivot_row, j);
      }
    }
    ++pivot_row;
  }
  return {a, pivot_row};
}

std::size_t rank(const RMatrix& m) { return rref(m).second; }

}  // namespace fernkit::exactlin
