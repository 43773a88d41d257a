#pragma once

// The extremal family f_l = (l x^m - 2x + 2) + (x^m - l) y^n.
//
// f_l is reducible over a field of characteristic != 2 exactly when
// g_m(l) = (l^2 + 2)^m - 2^m l vanishes there, and then x - (l^2+2)/2 divides
// it. Over Q, g_m(l) > 0 for l >= 2, so f_l is absolutely irreducible; if
// p = g_m(l) is prime then f_l mod p is reducible although p is large
// compared with H(f_l) = l.

#include <optional>
#include <span>
#include <vector>

#include "absirr/certify.hpp"
#include "absirr/poly.hpp"

namespace absirr {

// Throws DomainError unless m, n >= 1 and ell >= 2.
PolyZ family_poly(int m, int n, const Int& ell);

// (t^2 + 2)^m - 2^m t. Throws DomainError for m < 1.
Int g_eval(int m, const Int& t);

// u = (l^2 + 2) / 2 mod p, the common root of both y-coefficients of f_l.
// Verifies u^m == l and l u^m - 2u + 2 == 0 mod p, and that x - u divides
// f_l mod p (checked with n = 1; the root does not depend on n).
// Throws DomainError for p == 2, p not prime, or p not dividing g_m(l).
Int split_root(int m, const Int& ell, const Int& p);

// Eisenstein at prime q for the integer polynomial sum coeffs[i] t^i:
// q does not divide the leading coefficient, divides all others, and q^2
// does not divide the constant term.
bool satisfies_eisenstein(std::span<const Int> coeffs, const Int& q);

// t^(2m) - 2t + 2 at q = 2.
bool eisenstein_check(int m);

// Coefficients of g_m in increasing degree.
std::vector<Int> g_coefficients(int m);

// gcd of g(0), ..., g(d) for g of degree d, which is the gcd of g over all
// integers. Throws ZeroPolynomialError when every coefficient is zero.
Int fixed_divisor(std::span<const Int> coeffs);

struct FamilyInstance {
  int m = 0;
  int n = 0;
  Int ell;
  PolyZ f;
  Int g_value{};
  bool g_is_prime = false;
  Int height{};
  std::optional<Int> split_root{};  // when g_value is an odd prime
  bool split_divides = false;     // x - split_root divides f mod p
  // p >= H^(2m). Recorded, not asserted: for m = 1 it fails for every l >= 2.
  bool inequality_holds = false;
  std::optional<CertificateFp> reduction{};  // certify_mod_p(f, g_value) when prime
};

// Builds the full record for one parameter triple.
FamilyInstance family_instance(int m, int n, const Int& ell);

// Every l in [ell_min, ell_max] with g_m(l) prime, in increasing order.
// Throws DomainError unless m, n >= 1 and 2 <= ell_min <= ell_max.
std::vector<FamilyInstance> bouniakowsky_search(int m, int n, const Int& ell_min, const Int& ell_max);

}  // namespace absirr
