#pragma once

// Brute-force factor search over tiny finite fields, used to cross-check the
// criterion independently of any linear-algebra shortcut it relies on.

#include <optional>
#include <string>
#include <utility>

#include "absirr/poly.hpp"

namespace absirr {

// F_q for q = p or q = p^2. Elements are c0 + c1*a, where a is a root of
// t^2 + b t + c for the first (b, c) in lexicographic order that makes the
// quadratic irreducible mod p.
class SmallField {
 public:
  struct Element {
    int c0 = 0;
    int c1 = 0;
    bool operator==(const Element&) const = default;
  };
  using value_type = Element;

  // Throws DomainError unless p is prime, k is 1 or 2, and p^k <= 64.
  SmallField(int p, int k);

  int characteristic_int() const { return p_; }
  int degree() const { return k_; }
  int size() const { return k_ == 1 ? p_ : p_ * p_; }
  // Modulus polynomial t^2 + b t + c as (b, c); (0, 0) when k == 1.
  std::pair<int, int> modulus_poly() const { return {b_, c_}; }

  // Enumeration order: index e <-> (e mod p) + (e div p) * a.
  Element element(int index) const { return {index % p_, index / p_}; }
  int index(const Element& e) const { return e.c0 + e.c1 * p_; }

  Element zero() const { return {}; }
  Element one() const { return {1, 0}; }
  Element from_int(const Int& v) const;
  Element canonical(const Element& e) const { return {mod(e.c0), mod(e.c1)}; }
  Element add(const Element& a, const Element& b) const { return {mod(a.c0 + b.c0), mod(a.c1 + b.c1)}; }
  Element sub(const Element& a, const Element& b) const { return {mod(a.c0 - b.c0), mod(a.c1 - b.c1)}; }
  Element neg(const Element& a) const { return {mod(-a.c0), mod(-a.c1)}; }
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return a.c0 == 0 && a.c1 == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  // "3", "a", "(1+2*a)".
  std::string format(const Element& a) const;

  bool operator==(const SmallField& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  int mod(int v) const { return ((v % p_) + p_) % p_; }

  int p_;
  int k_;
  int b_ = 0;
  int c_ = 0;
};

using PolySmall = Bivariate<SmallField>;

// True iff f = g*h for some h over F_p. The unknown coefficients of h (with
// deg h <= deg f - deg g componentwise) are solved for as a linear system;
// no division algorithm and no leading-coefficient assumptions.
// Throws ModulusMismatchError / DomainError (g zero or constant).
bool divides_fp(const PolyFp& g, const PolyFp& f);

// The same test over a SmallField, returning the cofactor when it exists.
std::optional<PolySmall> exact_quotient(const PolySmall& g, const PolySmall& f);

struct OracleVerdict {
  enum class Status { kFactorFound, kNoFactorWithinScope };
  Status status = Status::kNoFactorWithinScope;
  SmallField field;
  std::optional<PolySmall> g;
  std::optional<PolySmall> h;
  int max_deg_x = 0;  // degree bounds searched, i.e. the bidegree of f
  int max_deg_y = 0;
};

// Searches F_{p^k} for a factorization f = g*h with both factors
// nonconstant. For each complementary bidegree pair, the side with fewer
// coefficients is enumerated (normalized so its first nonzero coefficient in
// row-major order is 1) and tested by exact_quotient. Returns the first hit.
//
// Throws DomainError unless p^k <= 9 and (deg_x f + 1)(deg_y f + 1) <= 9, or
// when f is zero.
OracleVerdict brute_factor(const PolyFp& f, int ext_degree);

// Embeds F_p into its degree-k extension.
PolySmall lift_to_small(const PolyFp& f, const SmallField& field);

}  // namespace absirr
