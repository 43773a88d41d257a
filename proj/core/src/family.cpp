#include "absirr/family.hpp"

#include "absirr/numtheory.hpp"
#include "absirr/oracle.hpp"

namespace absirr {
namespace {

void require_family_domain(int m, int n, const Int& ell) {
  if (m < 1 || n < 1) throw DomainError("family needs m >= 1 and n >= 1");
  if (ell < 2) throw DomainError("family needs l >= 2");
}

Int mod_pow(const Int& base, unsigned long e, const Int& p) {
  Int out;
  const Int exponent(e);
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
  return out;
}

}  // namespace

PolyZ family_poly(int m, int n, const Int& ell) {
  require_family_domain(m, n, ell);
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m) + 1, std::vector<Int>(static_cast<std::size_t>(n) + 1, 0));
  rows[m][0] += ell;
  rows[1][0] -= 2;
  rows[0][0] += 2;
  rows[m][n] += 1;
  rows[0][n] -= ell;
  return PolyZ::from_rows({}, rows);
}

Int g_eval(int m, const Int& t) {
  if (m < 1) throw DomainError("g_m needs m >= 1");
  const auto e = static_cast<unsigned long>(m);
  return pow(t * t + 2, e) - pow(Int(2), e) * t;
}

Int split_root(int m, const Int& ell, const Int& p) {
  require_family_domain(m, 1, ell);
  if (p == 2) throw DomainError("split root needs characteristic != 2");
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
  const Int g = g_eval(m, ell);
  if (mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError(p.get_str() + " does not divide g_" + std::to_string(m) + "(" + ell.get_str() + ")");

  const PrimeField field(p);
  const Int u = field.reduce((ell * ell + 2) * mod_inverse(2, p));
  const Int um = mod_pow(u, static_cast<unsigned long>(m), p);
  if (field.reduce(um - ell) != 0 || field.reduce(ell * um - 2 * u + 2) != 0)
    throw InvariantViolation("split root fails its defining equations");
  const PolyFp linear = PolyFp::x(field) - PolyFp::constant(field, u);
  const PolyFp f = reduce_mod(family_poly(m, 1, ell), field).poly;
  if (!divides_fp(linear, f)) throw InvariantViolation("x - split root does not divide f_l mod p");
  return u;
}

bool satisfies_eisenstein(std::span<const Int> coeffs, const Int& q) {
  std::size_t d = coeffs.size();
  while (d > 0 && coeffs[d - 1] == 0) --d;
  if (d < 2) return false;
  auto divisible = [](const Int& a, const Int& b) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; };
  if (divisible(coeffs[d - 1], q)) return false;
  for (std::size_t i = 0; i + 1 < d; ++i)
    if (!divisible(coeffs[i], q)) return false;
  return !divisible(coeffs[0], q * q);
}

bool eisenstein_check(int m) {
  if (m < 1) throw DomainError("eisenstein_check needs m >= 1");
  std::vector<Int> coeffs(static_cast<std::size_t>(2 * m) + 1, 0);
  coeffs[0] = 2;
  coeffs[1] -= 2;
  coeffs[2 * m] += 1;
  return satisfies_eisenstein(coeffs, 2);
}

std::vector<Int> g_coefficients(int m) {
  if (m < 1) throw DomainError("g_m needs m >= 1");
  // (t^2 + 2)^m = sum_k C(m,k) 2^(m-k) t^(2k)
  std::vector<Int> coeffs(static_cast<std::size_t>(2 * m) + 1, 0);
  for (int k = 0; k <= m; ++k) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    coeffs[2 * k] = binom * pow(Int(2), static_cast<unsigned long>(m - k));
  }
  coeffs[1] -= pow(Int(2), static_cast<unsigned long>(m));
  return coeffs;
}

Int fixed_divisor(std::span<const Int> coeffs) {
  std::size_t d = coeffs.size();
  while (d > 0 && coeffs[d - 1] == 0) --d;
  if (d == 0) throw ZeroPolynomialError("fixed divisor of the zero polynomial is undefined");
  Int g = 0;
  for (std::size_t t = 0; t < d; ++t) {
    Int value = 0;
    for (std::size_t i = d; i-- > 0;) value = value * static_cast<unsigned long>(t) + coeffs[i];
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
  }
  return g;
}

FamilyInstance family_instance(int m, int n, const Int& ell) {
  FamilyInstance inst{.m = m, .n = n, .ell = ell, .f = family_poly(m, n, ell)};
  inst.g_value = g_eval(m, ell);
  inst.g_is_prime = is_prime(inst.g_value);
  inst.height = height(inst.f);
  if (!inst.g_is_prime) return inst;

  const Int& p = inst.g_value;
  inst.inequality_holds = p >= pow(inst.height, 2UL * static_cast<unsigned long>(m));
  if (p != 2) {
    inst.split_root = split_root(m, ell, p);
    const PrimeField field(p);
    const PolyFp linear = PolyFp::x(field) - PolyFp::constant(field, *inst.split_root);
    inst.split_divides = divides_fp(linear, reduce_mod(inst.f, field).poly);
  }
  inst.reduction = certify_mod_p(inst.f, p);
  return inst;
}

std::vector<FamilyInstance> bouniakowsky_search(int m, int n, const Int& ell_min, const Int& ell_max) {
  require_family_domain(m, n, ell_min);
  if (ell_max < ell_min) throw DomainError("empty search range");
  std::vector<FamilyInstance> hits;
  for (Int ell = ell_min; ell <= ell_max; ++ell) {
    if (!is_prime(g_eval(m, ell))) continue;
    hits.push_back(family_instance(m, n, ell));
  }
  return hits;
}

}  // namespace absirr
