#include "absirr/poly.hpp"

#include "absirr/numtheory.hpp"

namespace absirr {

PrimeField::PrimeField(const Int& p) : p_(p) {
  if (!is_prime(p)) throw DomainError("modulus " + p.get_str() + " is not prime");
}

Int PrimeField::inv(const Int& a) const {
  if (sgn(a) == 0) throw DomainError("zero has no inverse mod " + p_.get_str());
  return mod_inverse(a, p_);
}

Int height(const PolyZ& f) {
  if (f.is_zero()) throw ZeroPolynomialError("height of the zero polynomial is undefined");
  Int h = 0;
  for (int i = 0; i <= f.deg_x(); ++i) {
    for (int j = 0; j <= f.deg_y(); ++j) {
      Int a = abs(f.coeff(i, j));
      if (a > h) h = a;
    }
  }
  return h;
}

Reduction reduce_mod(const PolyZ& f, const PrimeField& field) {
  if (f.is_zero()) throw ZeroPolynomialError();
  auto reduced = f.map_coefficients(field, [&](const Int& a) { return field.reduce(a); });
  if (reduced.is_zero())
    throw ZeroPolynomialError("every coefficient is divisible by " + field.modulus().get_str());
  Reduction out{reduced, false, false};
  const int m = f.deg_x();
  const int n = f.deg_y();
  out.degree_dropped = reduced.deg_x() != m || reduced.deg_y() != n;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i != m && j != n) continue;
      if (sgn(f.coeff(i, j)) != 0 && field.is_zero(reduced.coeff(i, j))) out.leading_entries_vanished = true;
    }
  }
  return out;
}

PolyZ lift(const PolyFp& f) {
  return f.map_coefficients(IntegerRing{}, [](const Int& a) { return a; });
}

}  // namespace absirr
