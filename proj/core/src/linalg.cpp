#include "absirr/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace absirr {
namespace {

struct BareissRun {
  std::size_t steps = 0;
  std::vector<std::size_t> row_of;  // current position -> original row
  std::vector<std::size_t> col_of;  // current position -> original column
  Int last_pivot = 1;
};

// Fraction-free elimination with full pivoting, stopping after max_steps
// pivots or when the active block is zero. After step k the active entries
// are (k+1)-minors of the permuted matrix, so the division by the previous
// pivot is exact; that is checked on every update.
BareissRun bareiss(IntMatrix a, std::size_t max_steps) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BareissRun run;
  run.row_of.resize(rows);
  run.col_of.resize(cols);
  std::iota(run.row_of.begin(), run.row_of.end(), 0);
  std::iota(run.col_of.begin(), run.col_of.end(), 0);

  Int prev = 1;
  Int t;
  std::size_t k = 0;
  for (; k < std::min({rows, cols, max_steps}); ++k) {
    std::size_t bi = rows;
    std::size_t bj = cols;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (bi == rows) {
          bi = i;
          bj = j;
          continue;
        }
        const int c = mpz_cmpabs(a(i, j).get_mpz_t(), a(bi, bj).get_mpz_t());
        const bool earlier = std::pair(run.row_of[i], run.col_of[j]) < std::pair(run.row_of[bi], run.col_of[bj]);
        if (c < 0 || (c == 0 && earlier)) {
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) break;
    if (bi != k) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(bi, j), a(k, j));
      std::swap(run.row_of[bi], run.row_of[k]);
    }
    if (bj != k) {
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, bj), a(i, k));
      std::swap(run.col_of[bj], run.col_of[k]);
    }
    const Int& pivot = a(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        t = pivot * a(i, j) - a(i, k) * a(k, j);
        if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
          throw InvariantViolation("Bareiss step produced an inexact division");
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  run.steps = k;
  run.last_pivot = prev;
  return run;
}

}  // namespace

std::size_t rank(const IntMatrix& m) {
  return bareiss(m, std::numeric_limits<std::size_t>::max()).steps;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  IntMatrix a = m;
  const std::size_t n = a.rows();
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && sgn(a(pivot, k)) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        if (mpz_divisible_p(t.get_mpz_t(), prev.get_mpz_t()) == 0)
          throw InvariantViolation("Bareiss determinant produced an inexact division");
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Int(1) : Int(sign * a(n - 1, n - 1));
}

MinorWitness max_minor(const IntMatrix& m, std::size_t r) {
  const BareissRun run = bareiss(m, r);
  if (run.steps < r) throw RankDeficientError(run.steps, r);
  MinorWitness w;
  w.row_indices.assign(run.row_of.begin(), run.row_of.begin() + static_cast<std::ptrdiff_t>(r));
  w.col_indices.assign(run.col_of.begin(), run.col_of.begin() + static_cast<std::ptrdiff_t>(r));
  std::sort(w.row_indices.begin(), w.row_indices.end());
  std::sort(w.col_indices.begin(), w.col_indices.end());
  w.det_value = determinant(m.submatrix(w.row_indices, w.col_indices));
  if (abs(w.det_value) != abs(run.last_pivot) || sgn(w.det_value) == 0)
    throw InvariantViolation("maximal minor disagrees with its elimination pivot");
  return w;
}

std::vector<std::vector<Int>> nullspace(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && sgn(a[p][col]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const mpq_class scale = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= scale;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || sgn(a[i][col]) == 0) continue;
      const mpq_class f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Int>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    Int denom_lcm = 1;
    for (const auto& q : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> iv;
    iv.reserve(cols);
    Int g = 0;
    for (const auto& q : v) {
      Int e = q.get_num() * (denom_lcm / q.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
      iv.push_back(std::move(e));
    }
    int sign = 1;
    for (const auto& e : iv) {
      if (sgn(e) != 0) {
        sign = sgn(e);
        break;
      }
    }
    for (auto& e : iv) e = sign * (e / g);
    basis.push_back(std::move(iv));
  }
  return basis;
}

FpMatrix reduce_mod(const IntMatrix& m, const PrimeField& field) {
  FpMatrix out(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = field.reduce(m(i, j));
  return out;
}

}  // namespace absirr
