#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "absirr/rings.hpp"

namespace absirr {

// Miller-Rabin. Deterministic below 3.317e24 (first thirteen prime bases);
// above that, 64 additional pseudo-random bases from a fixed seed, so the
// answer is reproducible and wrong with probability below 4^-64.
bool is_prime(const Int& n);

// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

struct FactorizationResult {
  // Sorted by prime, each prime once.
  std::vector<std::pair<Int, unsigned>> prime_factors;
  // Unsplit remainder; 1 when the factorization is complete.
  Int cofactor = 1;
  bool budget_exhausted = false;

  bool complete() const { return cofactor == 1; }
  // Product of p^e times the cofactor.
  Int product() const;
};

// Trial division by primes below 10^6, then Pollard-Brent rho with
// polynomial x^2 + c for c = 1, 2, 3, ... until `rho_budget` iterations
// have been spent in total. Factors |n|. Throws DomainError for n == 0.
FactorizationResult factor(const Int& n, std::uint64_t rho_budget = 10'000'000);

// a^-1 mod p in [1, p). Throws DomainError when gcd(a, p) != 1.
Int mod_inverse(const Int& a, const Int& p);

// Smallest r >= 0 with r*r >= n. Throws DomainError for n < 0.
Int isqrt_ceil(const Int& n);

Int pow(const Int& base, unsigned long exponent);

}  // namespace absirr
