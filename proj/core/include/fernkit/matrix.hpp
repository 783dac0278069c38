#ifndef FERNKIT_MATRIX_HPP
#define FERNKIT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "fernkit/rational.hpp"

namespace fernkit::exactlin {

// Dense matrix over the exact rationals, row-major. Values are immutable
// in practice: every operation returns a fresh matrix.
class RMatrix {
public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static RMatrix identity(std::size_t n);
  static RMatrix zero(std::size_t rows, std::size_t cols) {
    return RMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool operator==(const RMatrix& other) const = default;

  RMatrix operator+(const RMatrix& other) const;
  RMatrix operator-(const RMatrix& other) const;
  RMatrix operator*(const RMatrix& other) const;
  RMatrix operator*(const Rational& scalar) const;

  RMatrix transpose() const;
  std::vector<Rational> diagonal() const;
  Rational trace() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;

  // nullopt when not square or singular.
  std::optional<RMatrix> inverse() const;
  // Throws SingularityError instead of returning nullopt.
  RMatrix inverse_or_throw(const char* context) const;

  // Row-major flattening; a matrix of gl_n becomes a vector of length n^2,
  // so matrix subspaces reuse the vector subspace machinery.
  std::vector<Rational> flatten() const { return entries_; }
  static RMatrix from_flat(const std::vector<Rational>& flat, std::size_t n);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Reduced row-echelon form (leading coefficients 1, pivot columns cleared)
// together with the rank. RREF is a canonical form: rref(rref(M)) = rref(M).
std::pair<RMatrix, std::size_t> rref(const RMatrix& m);

std::size_t rank(const RMatrix& m);

}  // namespace fernkit::exactlin

#endif  // FERNKIT_MATRIX_HPP
