#include "absirr/numtheory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "absirr/errors.hpp"

namespace absirr {
namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Strong probable-prime test to base a; n odd, n > 3, n - 1 = d * 2^s.
bool strong_probable_prime(const Int& n, const Int& a, const Int& d, unsigned long s) {
  const Int n_minus_1 = n - 1;
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Below this bound the first thirteen primes as bases give a deterministic
// Miller-Rabin test.
const Int& deterministic_limit() {
  static const Int limit("3317044064679887385961981");
  return limit;
}

struct RhoOutcome {
  std::optional<Int> divisor;
  bool out_of_budget = false;
};

// Brent's variant of Pollard rho on x -> x^2 + c mod n, gcds batched over
// blocks of 128 steps with backtracking when a block overshoots.
RhoOutcome brent_rho(const Int& n, unsigned long c, std::uint64_t& budget) {
  constexpr std::uint64_t kBlock = 128;
  auto step = [&](const Int& v) -> Int { return (v * v + c) % n; };
  Int y = 2;
  Int x;
  Int ys;
  Int q = 1;
  Int g = 1;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) {
      if (budget == 0) return {std::nullopt, true};
      --budget;
      y = step(y);
    }
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t block = std::min(kBlock, r - k);
      for (std::uint64_t i = 0; i < block; ++i) {
        if (budget == 0) return {std::nullopt, true};
        --budget;
        y = step(y);
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += block;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      if (budget == 0) return {std::nullopt, true};
      --budget;
      ys = step(ys);
      Int diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == n) return {};
  return {g, false};
}

}  // namespace

Int pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  Int d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long a : kBases)
    if (!strong_probable_prime(n, Int(a), d, s)) return false;
  if (n < deterministic_limit()) return true;

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedULL);
  const Int span = n - 3;  // bases drawn from [2, n-2]
  for (int round = 0; round < 64; ++round) {
    const Int a = Int(rng.get_z_range(span)) + 2;
    if (!strong_probable_prime(n, a, d, s)) return false;
  }
  return true;
}

Int next_prime(const Int& n) {
  Int c = n < 2 ? Int(2) : Int(n + 1);
  while (!is_prime(c)) ++c;
  return c;
}

Int FactorizationResult::product() const {
  Int out = cofactor;
  for (const auto& [p, e] : prime_factors) out *= pow(p, e);
  return out;
}

FactorizationResult factor(const Int& n, std::uint64_t rho_budget) {
  if (n == 0) throw DomainError("cannot factor zero");
  Int rest = abs(n);
  std::map<Int, unsigned> found;

  for (unsigned long p : small_primes()) {
    if (Int(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++found[Int(p)];
    }
  }

  FactorizationResult result;
  std::vector<Int> pending;
  if (rest > 1) pending.push_back(rest);
  std::uint64_t budget = rho_budget;
  while (!pending.empty()) {
    Int x = std::move(pending.back());
    pending.pop_back();
    if (x == 1) continue;
    if (is_prime(x)) {
      ++found[x];
      continue;
    }
    if (mpz_perfect_power_p(x.get_mpz_t()) != 0) {
      bool split = false;
      for (unsigned long k = 2; !split; ++k) {
        Int root;
        if (mpz_root(root.get_mpz_t(), x.get_mpz_t(), k) != 0) {
          pending.insert(pending.end(), k, root);
          split = true;
        }
      }
      continue;
    }
    if (result.budget_exhausted) {
      result.cofactor *= x;
      continue;
    }
    bool split = false;
    for (unsigned long c = 1; !split; ++c) {
      RhoOutcome outcome = brent_rho(x, c, budget);
      if (outcome.out_of_budget) {
        result.budget_exhausted = true;
        break;
      }
      if (outcome.divisor) {
        pending.push_back(*outcome.divisor);
        pending.push_back(x / *outcome.divisor);
        split = true;
      }
    }
    if (!split) result.cofactor *= x;
  }

  for (auto& [p, e] : found) result.prime_factors.emplace_back(p, e);
  return result;
}

Int mod_inverse(const Int& a, const Int& p) {
  if (p < 2) throw DomainError("modulus must be at least 2");
  Int out;
  if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError(a.get_str() + " is not invertible mod " + p.get_str());
  return out;
}

Int isqrt_ceil(const Int& n) {
  if (n < 0) throw DomainError("square root of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (r * r < n) ++r;
  return r;
}

}  // namespace absirr
