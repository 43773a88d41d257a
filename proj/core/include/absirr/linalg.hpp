#pragma once

// Exact dense linear algebra.
//
// Integer matrices go through fraction-free (Bareiss) elimination; matrices
// over a field go through ordinary Gauss-Jordan elimination. Nothing here
// touches floating point.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "absirr/errors.hpp"
#include "absirr/rings.hpp"

namespace absirr {

template <CoefficientRing R>
class Matrix {
 public:
  using value_type = typename R::value_type;

  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix from_rows(R ring, const std::vector<std::vector<value_type>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(std::move(ring), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = out.ring_.canonical(rows[i][j]);
    }
    return out;
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix out(ring_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
      for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
    return out;
  }

  // M * v.
  std::vector<value_type> apply(std::span<const value_type> v) const {
    if (v.size() != cols_) throw DomainError("vector length does not match matrix columns");
    std::vector<value_type> out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out[i] = ring_.add(out[i], ring_.mul((*this)(i, j), v[j]));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.ring_ == b.ring_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!a.ring_.equal(a.data_[k], b.data_[k])) return false;
    return true;
  }

 private:
  R ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

using IntMatrix = Matrix<IntegerRing>;
using FpMatrix = Matrix<PrimeField>;

// A nonsingular square submatrix: strictly increasing row and column index
// lists of equal length and the exact determinant of the selected block.
struct MinorWitness {
  std::vector<std::size_t> row_indices;
  std::vector<std::size_t> col_indices;
  Int det_value;
};

// Rank over Q by Bareiss elimination. The pivot at each step is the nonzero
// entry of smallest absolute value in the active block, ties broken by the
// original (row, col) indices. Every elimination division is checked to be
// exact; a failed check throws InvariantViolation.
std::size_t rank(const IntMatrix& m);

// Determinant of a square integer matrix (Bareiss with row pivoting).
Int determinant(const IntMatrix& m);

// Index sets and determinant of one nonsingular r x r submatrix, taken from
// the first r pivots of the same elimination `rank` performs. The
// determinant is recomputed on the extracted block by a second, independent
// pass; a disagreement in absolute value throws InvariantViolation.
// Throws RankDeficientError when rank(m) < r.
MinorWitness max_minor(const IntMatrix& m, std::size_t r);

// Basis of the right kernel over Q, each vector scaled to a primitive
// integer vector whose first nonzero coordinate is positive. Free columns
// are taken in increasing order.
std::vector<std::vector<Int>> nullspace(const IntMatrix& m);

FpMatrix reduce_mod(const IntMatrix& m, const PrimeField& field);

// ---------------------------------------------------------------------------
// Field algorithms.

template <Field F>
struct Echelon {
  Matrix<F> reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
};

template <Field F>
Echelon<F> reduced_row_echelon(Matrix<F> a) {
  const F& field = a.ring();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && field.is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const auto scale = field.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = field.mul(a(row, j), scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || field.is_zero(a(i, col))) continue;
      const auto factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        a(i, j) = field.sub(a(i, j), field.mul(factor, a(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return reduced_row_echelon(m).pivot_cols.size();
}

// Right kernel basis: one vector per free column (in column order) with that
// free variable set to 1, then scaled so the first nonzero coordinate is 1.
template <Field F>
std::vector<std::vector<typename F::value_type>> nullspace(const Matrix<F>& m) {
  const F& field = m.ring();
  const auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      v[ech.pivot_cols[r]] = field.neg(ech.reduced(r, free));
    for (const auto& c : v) {
      if (field.is_zero(c)) continue;
      const auto s = field.inv(c);
      for (auto& e : v) e = field.mul(e, s);
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of A x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
template <Field F>
std::optional<std::vector<typename F::value_type>> solve(const Matrix<F>& a,
                                                         std::span<const typename F::value_type> b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side length does not match matrix rows");
  const F& field = a.ring();
  Matrix<F> aug(field, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = field.canonical(b[i]);
  }
  const auto ech = reduced_row_echelon(std::move(aug));
  if (!ech.pivot_cols.empty() && ech.pivot_cols.back() == a.cols()) return std::nullopt;
  std::vector<typename F::value_type> x(a.cols(), field.zero());
  for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r) x[ech.pivot_cols[r]] = ech.reduced(r, a.cols());
  return x;
}

}  // namespace absirr
