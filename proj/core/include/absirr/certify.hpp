#pragma once

// Absolute-irreducibility certificates, the explicit prime bound, and the
// search for primes at which the criterion matrix loses rank.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absirr/linalg.hpp"
#include "absirr/numtheory.hpp"
#include "absirr/poly.hpp"
#include "absirr/criterion.hpp"

namespace absirr {

// B = base^((2mn+n-1)/2) * H^(2mn+n-1) with
// base = m(n+1)n^2 + (m+1)(n-1)m^2. B itself may be irrational, so it is held
// through its exact square and the integer ceiling of B.
struct BoundValue {
  int m = 0;
  int n = 0;
  Int height;
  Int base;
  unsigned exponent_num = 0;  // B carries base^(exponent_num / 2)
  unsigned height_exp = 0;
  Int squared_value;  // B^2 = base^exponent_num * H^(2 height_exp)
  Int ceil_value;     // ceil(B)

  // B is an integer (then B == ceil_value).
  bool exact() const { return ceil_value * ceil_value == squared_value; }
};

// Throws DomainError unless m, n >= 1 and H >= 1.
BoundValue bound_rect(int m, int n, const Int& height);

// p > B, decided as p^2 > B^2. Throws DomainError for p < 2 or bad (m, n, H).
bool exceeds_bound(const Int& p, int m, int n, const Int& height);

// d^(3d^2-3) * H^(d^2-1). Throws DomainError unless d, H >= 1.
Int bound_total(int d, const Int& height);

enum class Verdict {
  kAbsolutelyIrreducible,
  kReducible,
  kInconclusiveRankDrop,
};

std::string_view to_string(Verdict v);

template <CoefficientRing R>
struct Certificate {
  Verdict verdict = Verdict::kInconclusiveRankDrop;
  std::optional<Int> modulus{};  // empty in characteristic zero
  std::size_t rank = 0;
  std::size_t full_rank = 0;
  // The polynomial the matrix was built from: after reduction mod p and
  // after the x <-> y swap when `transposed` is set. The witness refers to it.
  Bivariate<R> analyzed;
  std::optional<Witness<R>> witness{};
  bool degree_dropped = false;
  bool transposed = false;
  // Bound for the original integer polynomial; absent when deg_x or deg_y of
  // the input is zero (the bound needs m, n >= 1).
  std::optional<BoundValue> bound{};
  // Mod p only: p exceeds the bound for the original polynomial.
  bool exceeds_bound = false;
};

using CertificateZ = Certificate<IntegerRing>;
using CertificateFp = Certificate<PrimeField>;

// Characteristic zero. Full rank means ABSOLUTELY_IRREDUCIBLE; a rank drop
// means REDUCIBLE, with a primitive integer kernel witness.
//
// When deg_y f == 0 the variables are swapped first. A polynomial in one
// variable of degree d has an empty criterion matrix with d-1 unknowns: it is
// certified irreducible iff d == 1, and for d >= 2 the witness is (r,s) = (0,1).
//
// Throws ZeroPolynomialError for zero and DomainError for constants.
CertificateZ certify_char0(const PolyZ& f);

// Same over F_p after reducing f. Full rank means ABSOLUTELY_IRREDUCIBLE;
// a rank drop is only INCONCLUSIVE_RANK_DROP, since the converse direction of
// the criterion needs characteristic zero.
//
// Throws DomainError when p is not prime or f mod p is constant, and
// ZeroPolynomialError when f mod p vanishes.
CertificateFp certify_mod_p(const PolyZ& f, const Int& p);

struct PrimeCheck {
  Int prime;
  Verdict verdict = Verdict::kInconclusiveRankDrop;
  std::size_t rank = 0;
  std::size_t full_rank = 0;
  bool degree_dropped = false;
  // f mod p collapsed to a constant, so no matrix could be built.
  bool reduced_to_constant = false;
};

struct BadPrimeReport {
  MinorWitness minor;  // empty index sets and det 1 for a linear univariate f
  FactorizationResult factorization;
  std::vector<Int> confirmed_bad;  // rank drops mod p (sorted)
  std::vector<Int> ruled_out;      // divides D but the rank stays full (sorted)
  std::vector<PrimeCheck> checks;  // one per known prime factor of D (sorted)
  std::vector<Int> ignored_hints;  // hints that do not divide D, or are not prime
  Int cofactor_note = 1;           // unfactored part of |D|
  bool transposed = false;
  std::optional<BoundValue> bound{};
};

// Every prime at which the criterion matrix drops rank divides every maximal
// minor, so one nonzero maximal minor D gives a complete candidate list
// relative to what of |D| gets factored. Hints are checked, never trusted.
//
// Also re-checks D^2 <= base^(2mn+n-1) * H^(2(2mn+n-1)) (Hadamard) and throws
// InvariantViolation if that fails.
//
// Throws DomainError when f is reducible over Q or constant.
BadPrimeReport bad_primes(const PolyZ& f, std::uint64_t rho_budget = 10'000'000,
                          const std::vector<Int>& hint_primes = {});

// Throws InvariantViolation unless det^2 <= bound.squared_value.
void check_hadamard(const Int& det, const BoundValue& bound);

}  // namespace absirr
