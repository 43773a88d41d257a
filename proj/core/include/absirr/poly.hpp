#pragma once

// Dense bivariate polynomials over a coefficient ring.
//
// A nonzero polynomial stores the grid a[i][j] for 0 <= i <= deg_x and
// 0 <= j <= deg_y with exact degrees: row deg_x and column deg_y both hold
// a nonzero entry. Every constructor and operation re-trims. Reading a
// coefficient outside the grid (including negative indices) yields zero.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "absirr/errors.hpp"
#include "absirr/rings.hpp"

namespace absirr {

template <CoefficientRing R>
class Bivariate {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  explicit Bivariate(R ring) : ring_(std::move(ring)) {}
  Bivariate()
    requires std::default_initializable<R>
      : ring_() {}

  // rows[i][j] is the coefficient of x^i y^j; ragged rows are zero-padded.
  static Bivariate from_rows(R ring, const std::vector<std::vector<value_type>>& rows) {
    Bivariate out(std::move(ring));
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.size());
    if (rows.empty() || width == 0) return out;
    out.m_ = static_cast<int>(rows.size()) - 1;
    out.n_ = static_cast<int>(width) - 1;
    out.a_.assign(rows.size() * width, out.ring_.zero());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        out.a_[i * width + j] = out.ring_.canonical(rows[i][j]);
      }
    }
    out.trim();
    return out;
  }

  static Bivariate monomial(R ring, const value_type& c, int i, int j) {
    std::vector<std::vector<value_type>> rows(static_cast<std::size_t>(i) + 1,
                                              std::vector<value_type>(static_cast<std::size_t>(j) + 1,
                                                                      ring.zero()));
    rows[i][j] = c;
    return from_rows(std::move(ring), rows);
  }

  static Bivariate constant(R ring, const value_type& c) { return monomial(std::move(ring), c, 0, 0); }
  static Bivariate x(R ring) { return monomial(ring, ring.one(), 1, 0); }
  static Bivariate y(R ring) { return monomial(ring, ring.one(), 0, 1); }

  const R& ring() const { return ring_; }
  bool is_zero() const { return m_ < 0; }
  bool is_constant() const { return m_ <= 0 && n_ <= 0; }

  int deg_x() const {
    if (is_zero()) throw ZeroPolynomialError("the zero polynomial has no x-degree");
    return m_;
  }
  int deg_y() const {
    if (is_zero()) throw ZeroPolynomialError("the zero polynomial has no y-degree");
    return n_;
  }

  value_type coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > m_ || j > n_) return ring_.zero();
    return a_[static_cast<std::size_t>(i) * width() + static_cast<std::size_t>(j)];
  }

  // True when deg_x <= dx and deg_y <= dy; the zero polynomial satisfies any bound.
  bool degree_within(int dx, int dy) const { return is_zero() || (m_ <= dx && n_ <= dy); }

  Bivariate operator-() const {
    Bivariate out = *this;
    for (auto& c : out.a_) c = ring_.neg(c);
    return out;
  }

  friend Bivariate operator+(const Bivariate& f, const Bivariate& g) { return combine(f, g, false); }
  friend Bivariate operator-(const Bivariate& f, const Bivariate& g) { return combine(f, g, true); }

  friend Bivariate operator*(const Bivariate& f, const Bivariate& g) {
    check_same_ring(f, g);
    Bivariate out(f.ring_);
    if (f.is_zero() || g.is_zero()) return out;
    out.m_ = f.m_ + g.m_;
    out.n_ = f.n_ + g.n_;
    out.a_.assign(static_cast<std::size_t>(out.m_ + 1) * out.width(), f.ring_.zero());
    for (int i = 0; i <= f.m_; ++i) {
      for (int j = 0; j <= f.n_; ++j) {
        const value_type& c = f.a_[i * f.width() + j];
        if (f.ring_.is_zero(c)) continue;
        for (int k = 0; k <= g.m_; ++k) {
          for (int l = 0; l <= g.n_; ++l) {
            auto& slot = out.a_[(i + k) * out.width() + (j + l)];
            slot = f.ring_.add(slot, f.ring_.mul(c, g.a_[k * g.width() + l]));
          }
        }
      }
    }
    out.trim();
    return out;
  }

  Bivariate scaled(const value_type& c) const {
    Bivariate out = *this;
    for (auto& e : out.a_) e = ring_.mul(e, c);
    out.trim();
    return out;
  }

  Bivariate pow(unsigned e) const {
    Bivariate result = constant(ring_, ring_.one());
    Bivariate base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  Bivariate partial_x() const { return derivative(true); }
  Bivariate partial_y() const { return derivative(false); }

  // f(y, x).
  Bivariate transposed() const {
    Bivariate out(ring_);
    if (is_zero()) return out;
    out.m_ = n_;
    out.n_ = m_;
    out.a_.assign(a_.size(), ring_.zero());
    for (int i = 0; i <= m_; ++i)
      for (int j = 0; j <= n_; ++j) out.a_[j * out.width() + i] = a_[i * width() + j];
    return out;
  }

  // Applies fn to every coefficient, landing in another ring.
  template <CoefficientRing R2, class Fn>
  Bivariate<R2> map_coefficients(R2 target, Fn fn) const {
    std::vector<std::vector<typename R2::value_type>> rows;
    for (int i = 0; i <= m_; ++i) {
      auto& row = rows.emplace_back();
      for (int j = 0; j <= n_; ++j) row.push_back(fn(a_[i * width() + j]));
    }
    return Bivariate<R2>::from_rows(std::move(target), rows);
  }

  friend bool operator==(const Bivariate& f, const Bivariate& g) {
    if (!(f.ring_ == g.ring_) || f.m_ != g.m_ || f.n_ != g.n_) return false;
    for (std::size_t k = 0; k < f.a_.size(); ++k)
      if (!f.ring_.equal(f.a_[k], g.a_[k])) return false;
    return true;
  }

 private:
  std::size_t width() const { return static_cast<std::size_t>(n_ + 1); }

  static void check_same_ring(const Bivariate& f, const Bivariate& g) {
    if (!(f.ring_ == g.ring_)) throw ModulusMismatchError();
  }

  static Bivariate combine(const Bivariate& f, const Bivariate& g, bool subtract) {
    check_same_ring(f, g);
    Bivariate out(f.ring_);
    const int m = std::max(f.m_, g.m_);
    const int n = std::max(f.n_, g.n_);
    if (m < 0) return out;
    out.m_ = m;
    out.n_ = n;
    out.a_.assign(static_cast<std::size_t>(m + 1) * out.width(), f.ring_.zero());
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= n; ++j) {
        const value_type a = f.coeff(i, j);
        const value_type b = g.coeff(i, j);
        out.a_[i * out.width() + j] = subtract ? f.ring_.sub(a, b) : f.ring_.add(a, b);
      }
    }
    out.trim();
    return out;
  }

  Bivariate derivative(bool in_x) const {
    Bivariate out(ring_);
    if (is_zero()) return out;
    out.m_ = m_;
    out.n_ = n_;
    out.a_.assign(a_.size(), ring_.zero());
    for (int i = 0; i <= m_; ++i) {
      for (int j = 0; j <= n_; ++j) {
        const int e = in_x ? i : j;
        if (e == 0) continue;
        const int ti = in_x ? i - 1 : i;
        const int tj = in_x ? j : j - 1;
        out.a_[ti * width() + tj] = ring_.mul(ring_.from_int(e), a_[i * width() + j]);
      }
    }
    out.trim();
    return out;
  }

  void trim() {
    int m = -1;
    int n = -1;
    for (int i = 0; i <= m_; ++i) {
      for (int j = 0; j <= n_; ++j) {
        if (!ring_.is_zero(a_[i * width() + j])) {
          m = std::max(m, i);
          n = std::max(n, j);
        }
      }
    }
    if (m == m_ && n == n_) return;
    std::vector<value_type> grid;
    if (m >= 0) {
      grid.reserve(static_cast<std::size_t>((m + 1) * (n + 1)));
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) grid.push_back(std::move(a_[i * width() + j]));
    }
    m_ = m;
    n_ = n;
    a_ = std::move(grid);
  }

  R ring_;
  int m_ = -1;
  int n_ = -1;
  std::vector<value_type> a_;
};

using PolyZ = Bivariate<IntegerRing>;
using PolyFp = Bivariate<PrimeField>;

// H(f) = max |a_ij|. Throws ZeroPolynomialError on zero.
Int height(const PolyZ& f);

struct Reduction {
  PolyFp poly;
  // The bidegree (deg_x, deg_y) changed under reduction.
  bool degree_dropped = false;
  // Some nonzero coefficient on the leading x-row or leading y-column vanished,
  // even if the bidegree survived.
  bool leading_entries_vanished = false;
};

// Coefficientwise reduction. Throws ZeroPolynomialError when f is zero or
// every coefficient is divisible by p.
Reduction reduce_mod(const PolyZ& f, const PrimeField& field);

// Representatives in [0, p) lifted back to the integers.
PolyZ lift(const PolyFp& f);

// Terms in descending x-degree, then descending y-degree, written in the
// grammar accepted by parse_poly, e.g. "x^9*y-9*x^9-2*x+9*y+2".
template <CoefficientRing R>
std::string print_canonical(const Bivariate<R>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.deg_x(); i >= 0; --i) {
    for (int j = f.deg_y(); j >= 0; --j) {
      const auto c = f.coeff(i, j);
      if (f.ring().is_zero(c)) continue;
      std::string text = f.ring().format(c);
      const bool negative = !text.empty() && text.front() == '-';
      if (negative) text.erase(0, 1);
      std::string mono;
      if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j > 0) {
        if (!mono.empty()) mono += "*";
        mono += j == 1 ? "y" : "y^" + std::to_string(j);
      }
      std::string term;
      if (mono.empty()) {
        term = text;
      } else if (text == "1") {
        term = mono;
      } else {
        term = text + "*" + mono;
      }
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? "-" : "+";
        out += term;
      }
    }
  }
  return out;
}

}  // namespace absirr
