#pragma once

// Coefficient rings shared by polynomials and matrices.
//
// A ring descriptor is a small value type that carries whatever parameters
// the arithmetic needs (the modulus, for a prime field) and exposes the
// operations as member functions over its value_type. Containers store the
// descriptor next to their entries so that mixed-modulus arithmetic can be
// detected and rejected.

#include <concepts>
#include <string>

#include <gmpxx.h>

namespace absirr {

using Int = mpz_class;

template <class R>
concept CoefficientRing = requires(const R& ring, const typename R::value_type& a) {
  typename R::value_type;
  { ring.zero() } -> std::convertible_to<typename R::value_type>;
  { ring.one() } -> std::convertible_to<typename R::value_type>;
  { ring.from_int(Int{}) } -> std::convertible_to<typename R::value_type>;
  { ring.canonical(a) } -> std::convertible_to<typename R::value_type>;
  { ring.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { ring.neg(a) } -> std::convertible_to<typename R::value_type>;
  { ring.is_zero(a) } -> std::convertible_to<bool>;
  { ring.equal(a, a) } -> std::convertible_to<bool>;
  { ring.format(a) } -> std::convertible_to<std::string>;
  { ring == ring } -> std::convertible_to<bool>;
};

template <class F>
concept Field = CoefficientRing<F> && requires(const F& field, const typename F::value_type& a) {
  { field.inv(a) } -> std::convertible_to<typename F::value_type>;
};

// The integers.
class IntegerRing {
 public:
  using value_type = Int;

  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int from_int(const Int& v) const { return v; }
  Int canonical(const Int& v) const { return v; }
  Int add(const Int& a, const Int& b) const { return a + b; }
  Int sub(const Int& a, const Int& b) const { return a - b; }
  Int mul(const Int& a, const Int& b) const { return a * b; }
  Int neg(const Int& a) const { return -a; }
  bool is_zero(const Int& a) const { return sgn(a) == 0; }
  bool equal(const Int& a, const Int& b) const { return a == b; }
  std::string format(const Int& a) const { return a.get_str(); }
  Int characteristic() const { return 0; }

  bool operator==(const IntegerRing&) const = default;
};

// Z/pZ for a prime p. Entries are kept in [0, p).
class PrimeField {
 public:
  using value_type = Int;

  // Throws DomainError unless p is prime.
  explicit PrimeField(const Int& p);

  const Int& modulus() const { return p_; }
  Int characteristic() const { return p_; }

  Int reduce(const Int& v) const {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
    return r;
  }

  Int zero() const { return 0; }
  Int one() const { return 1; }
  Int from_int(const Int& v) const { return reduce(v); }
  Int canonical(const Int& v) const { return reduce(v); }
  Int add(const Int& a, const Int& b) const {
    Int r = a + b;
    if (r >= p_) r -= p_;
    return r;
  }
  Int sub(const Int& a, const Int& b) const {
    Int r = a - b;
    if (sgn(r) < 0) r += p_;
    return r;
  }
  Int mul(const Int& a, const Int& b) const { return reduce(a * b); }
  Int neg(const Int& a) const { return sgn(a) == 0 ? a : Int(p_ - a); }
  // Throws DomainError for a == 0.
  Int inv(const Int& a) const;
  bool is_zero(const Int& a) const { return sgn(a) == 0; }
  bool equal(const Int& a, const Int& b) const { return a == b; }
  std::string format(const Int& a) const { return a.get_str(); }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  Int p_;
};

}  // namespace absirr
