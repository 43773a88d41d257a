#pragma once

// The linear system behind the closed-form criterion.
//
// For f of bidegree (m, n) with m, n >= 1 we look for r, s with
// deg r <= (m-1, n) and deg s <= (m, n-2) such that
//
//   r_y f - r f_y - s_x f + s f_x = 0.
//
// The left side has bidegree at most (2m-1, 2n-2) and is linear in the
// coefficients u_ij of r and v_ij of s, which gives the matrix M(f) with
// 2m(2n-1) rows and 2mn+n-1 columns. f is absolutely irreducible iff M(f) has
// full column rank (in characteristic zero); full rank certifies absolute
// irreducibility in every characteristic.
//
// Row (k, l) sits at index k*(2n-1) + l. Columns list u_ij (0<=i<m, 0<=j<=n)
// lexicographically, followed by v_ij (0<=i<=m, 0<=j<=n-2).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "absirr/errors.hpp"
#include "absirr/linalg.hpp"
#include "absirr/poly.hpp"

namespace absirr {

class CriterionShape {
 public:
  // Throws DomainError unless m, n >= 1.
  CriterionShape(int m, int n) : m_(m), n_(n) {
    if (m < 1 || n < 1)
      throw DomainError("criterion matrix needs deg_x >= 1 and deg_y >= 1, got (" +
                        std::to_string(m) + "," + std::to_string(n) + ")");
  }

  int m() const { return m_; }
  int n() const { return n_; }

  std::size_t rows() const { return static_cast<std::size_t>(2 * m_ * (2 * n_ - 1)); }
  std::size_t cols() const { return static_cast<std::size_t>(2 * m_ * n_ + n_ - 1); }
  std::size_t u_count() const { return static_cast<std::size_t>(m_ * (n_ + 1)); }

  std::size_t row(int k, int l) const { return static_cast<std::size_t>(k * (2 * n_ - 1) + l); }
  std::size_t u_col(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }
  std::size_t v_col(int i, int j) const { return u_count() + static_cast<std::size_t>(i * (n_ - 1) + j); }

  std::string row_label(std::size_t row) const;
  std::string col_label(std::size_t col) const;

  bool operator==(const CriterionShape&) const = default;

 private:
  int m_;
  int n_;
};

template <CoefficientRing R>
struct CriterionMatrix {
  CriterionShape shape;
  Matrix<R> body;
};

template <CoefficientRing R>
struct Witness {
  Bivariate<R> r;
  Bivariate<R> s;

  bool is_zero() const { return r.is_zero() && s.is_zero(); }
};

namespace detail {

inline void require_nonzero(const auto& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
}

template <CoefficientRing R>
void require_witness_bounds(const Witness<R>& w, int m, int n) {
  if (!w.r.degree_within(m - 1, n))
    throw DomainError("deg r exceeds (" + std::to_string(m - 1) + "," + std::to_string(n) + ")");
  if (!w.s.degree_within(m, n - 2))
    throw DomainError("deg s exceeds (" + std::to_string(m) + "," + std::to_string(n - 2) + ")");
}

}  // namespace detail

// Entries by direct formula:
//   row (k,l), column u_ij : (-l+2j-1) * a[k-i][l-j+1]
//   row (k,l), column v_ij : (k-2i+1) * a[k-i+1][l-j]
// where out-of-grid coefficients read as zero, which is exactly the
// membership test for the index sets of each g_kl.
template <CoefficientRing R>
CriterionMatrix<R> build_matrix(const Bivariate<R>& f) {
  detail::require_nonzero(f);
  const CriterionShape shape(f.deg_x(), f.deg_y());
  const R& ring = f.ring();
  Matrix<R> body(ring, shape.rows(), shape.cols());
  const int m = shape.m();
  const int n = shape.n();
  for (int k = 0; k <= 2 * m - 1; ++k) {
    for (int l = 0; l <= 2 * n - 2; ++l) {
      const std::size_t row = shape.row(k, l);
      for (int i = 0; i <= m - 1; ++i) {
        for (int j = 0; j <= n; ++j) {
          const auto a = f.coeff(k - i, l - j + 1);
          if (ring.is_zero(a)) continue;
          body(row, shape.u_col(i, j)) = ring.mul(ring.from_int(-l + 2 * j - 1), a);
        }
      }
      for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n - 2; ++j) {
          const auto a = f.coeff(k - i + 1, l - j);
          if (ring.is_zero(a)) continue;
          body(row, shape.v_col(i, j)) = ring.mul(ring.from_int(k - 2 * i + 1), a);
        }
      }
    }
  }
  return {shape, std::move(body)};
}

// r_y f - r f_y - s_x f + s f_x. Throws DomainError when r or s violates the
// degree bounds for f's bidegree.
template <CoefficientRing R>
Bivariate<R> expand_form(const Bivariate<R>& f, const Witness<R>& w) {
  detail::require_nonzero(f);
  detail::require_witness_bounds(w, f.deg_x(), f.deg_y());
  return w.r.partial_y() * f - w.r * f.partial_y() - w.s.partial_x() * f + w.s * f.partial_x();
}

template <CoefficientRing R>
Bivariate<R> expand_form(const Bivariate<R>& f, const Bivariate<R>& r, const Bivariate<R>& s) {
  return expand_form(f, Witness<R>{r, s});
}

// Coefficients of p on the monomials x^k y^l, 0<=k<=2m-1, 0<=l<=2n-2, in row
// order. Throws DomainError if p does not fit.
template <CoefficientRing R>
std::vector<typename R::value_type> coefficient_vector(const Bivariate<R>& p, const CriterionShape& shape) {
  if (!p.degree_within(2 * shape.m() - 1, 2 * shape.n() - 2))
    throw DomainError("polynomial does not fit the criterion row basis");
  std::vector<typename R::value_type> out;
  out.reserve(shape.rows());
  for (int k = 0; k <= 2 * shape.m() - 1; ++k)
    for (int l = 0; l <= 2 * shape.n() - 2; ++l) out.push_back(p.coeff(k, l));
  return out;
}

template <CoefficientRing R>
std::vector<typename R::value_type> witness_to_vec(const Witness<R>& w, const CriterionShape& shape) {
  detail::require_witness_bounds(w, shape.m(), shape.n());
  std::vector<typename R::value_type> v;
  v.reserve(shape.cols());
  for (int i = 0; i <= shape.m() - 1; ++i)
    for (int j = 0; j <= shape.n(); ++j) v.push_back(w.r.coeff(i, j));
  for (int i = 0; i <= shape.m(); ++i)
    for (int j = 0; j <= shape.n() - 2; ++j) v.push_back(w.s.coeff(i, j));
  return v;
}

template <CoefficientRing R>
Witness<R> vec_to_witness(const R& ring, std::span<const typename R::value_type> v,
                          const CriterionShape& shape) {
  if (v.size() != shape.cols())
    throw DomainError("witness vector has length " + std::to_string(v.size()) + ", expected " +
                      std::to_string(shape.cols()));
  using V = typename R::value_type;
  std::vector<std::vector<V>> r_rows(static_cast<std::size_t>(shape.m()),
                                     std::vector<V>(static_cast<std::size_t>(shape.n() + 1)));
  for (int i = 0; i <= shape.m() - 1; ++i)
    for (int j = 0; j <= shape.n(); ++j) r_rows[i][j] = v[shape.u_col(i, j)];
  std::vector<std::vector<V>> s_rows;
  if (shape.n() >= 2) {
    s_rows.assign(static_cast<std::size_t>(shape.m() + 1), std::vector<V>(static_cast<std::size_t>(shape.n() - 1)));
    for (int i = 0; i <= shape.m(); ++i)
      for (int j = 0; j <= shape.n() - 2; ++j) s_rows[i][j] = v[shape.v_col(i, j)];
  }
  return {Bivariate<R>::from_rows(ring, r_rows), Bivariate<R>::from_rows(ring, s_rows)};
}

enum class FactorMode {
  // f = g * h. The caller should pass an irreducible h for the nonzero
  // guarantee to hold.
  kSplit,
  // f = g^2 * h.
  kRepeated,
};

// Explicit kernel element for a known factorization.
//
//   kSplit, l = deg_y g nonzero in the ring:
//       r = (n-l) g_x h - l g h_x,   s = (n-l) g_y h - l g h_y
//   kSplit, l zero in the ring (l == 0, or p | l):
//       r = g_x h,                   s = g_y h
//   kRepeated:
//       r = h g_x,                   s = h g_y
//
// Throws DomainError when the product has deg_x or deg_y zero, and when the
// result degenerates to (0, 0) (g or h is a p-th power, or the chosen split
// has g^(n-l) proportional to h^l).
template <CoefficientRing R>
Witness<R> witness_from_factors(const Bivariate<R>& g, const Bivariate<R>& h, FactorMode mode) {
  detail::require_nonzero(g);
  detail::require_nonzero(h);
  const R& ring = g.ring();
  Witness<R> w{Bivariate<R>(ring), Bivariate<R>(ring)};
  int m = 0;
  int n = 0;
  if (mode == FactorMode::kRepeated) {
    const auto f = g * g * h;
    m = f.deg_x();
    n = f.deg_y();
    w = {h * g.partial_x(), h * g.partial_y()};
  } else {
    const auto f = g * h;
    m = f.deg_x();
    n = f.deg_y();
    const int l = g.deg_y();
    const auto ell = ring.from_int(l);
    if (ring.is_zero(ell)) {
      w = {g.partial_x() * h, g.partial_y() * h};
    } else {
      const auto c = ring.from_int(n - l);
      w = {(g.partial_x() * h).scaled(c) - (g * h.partial_x()).scaled(ell),
           (g.partial_y() * h).scaled(c) - (g * h.partial_y()).scaled(ell)};
    }
  }
  if (m < 1 || n < 1) throw DomainError("product must have deg_x >= 1 and deg_y >= 1");
  if (w.is_zero())
    throw DomainError("factor witness degenerates to (0,0): a factor is a p-th power or the split is not coprime");
  detail::require_witness_bounds(w, m, n);
  return w;
}

}  // namespace absirr
