#include "absirr/certify.hpp"

#include <algorithm>

namespace absirr {
namespace {

void require_bound_domain(int m, int n, const Int& height) {
  if (m < 1 || n < 1) throw DomainError("bound needs m >= 1 and n >= 1");
  if (height < 1) throw DomainError("bound needs height >= 1");
}

std::optional<BoundValue> bound_for(const PolyZ& f) {
  if (f.deg_x() < 1 || f.deg_y() < 1) return std::nullopt;
  return bound_rect(f.deg_x(), f.deg_y(), height(f));
}

template <CoefficientRing R>
Witness<R> witness_from_kernel(const Bivariate<R>& f, const CriterionShape& shape,
                               std::span<const typename R::value_type> v) {
  Witness<R> w = vec_to_witness(f.ring(), v, shape);
  if (w.is_zero() || !expand_form(f, w).is_zero())
    throw InvariantViolation("kernel vector does not satisfy the differential identity");
  return w;
}

// Shared tail of both certification routes: swap variables when deg_y is
// zero, handle the one-variable case, otherwise build the matrix and take
// rank and one kernel vector with the supplied routines.
template <CoefficientRing R, class RankFn, class KernelFn>
void analyze(const Bivariate<R>& f, Certificate<R>& cert, Verdict on_drop, RankFn rank_of, KernelFn kernel_of) {
  cert.analyzed = f;
  if (f.deg_y() == 0) {
    cert.analyzed = f.transposed();
    cert.transposed = true;
  }
  const Bivariate<R>& a = cert.analyzed;
  const R& ring = a.ring();
  if (a.deg_x() == 0) {
    // Only y appears: no u-unknowns, n-1 v-unknowns, and every equation is
    // trivially zero.
    const int n = a.deg_y();
    cert.full_rank = static_cast<std::size_t>(n - 1);
    cert.rank = 0;
    if (n == 1) {
      cert.verdict = Verdict::kAbsolutelyIrreducible;
    } else {
      cert.verdict = on_drop;
      cert.witness = Witness<R>{Bivariate<R>(ring), Bivariate<R>::constant(ring, ring.one())};
      if (!expand_form(a, *cert.witness).is_zero())
        throw InvariantViolation("univariate witness does not satisfy the differential identity");
    }
    return;
  }
  const auto matrix = build_matrix(a);
  cert.full_rank = matrix.shape.cols();
  cert.rank = rank_of(matrix.body);
  if (cert.rank == cert.full_rank) {
    cert.verdict = Verdict::kAbsolutelyIrreducible;
    return;
  }
  cert.verdict = on_drop;
  const auto kernel = kernel_of(matrix.body);
  if (kernel.empty()) throw InvariantViolation("rank drop without a kernel vector");
  cert.witness = witness_from_kernel(a, matrix.shape, std::span<const typename R::value_type>(kernel.front()));
}

}  // namespace

BoundValue bound_rect(int m, int n, const Int& height) {
  require_bound_domain(m, n, height);
  BoundValue b;
  b.m = m;
  b.n = n;
  b.height = height;
  b.base = Int(m) * (n + 1) * n * n + Int(m + 1) * (n - 1) * m * m;
  b.exponent_num = static_cast<unsigned>(2 * m * n + n - 1);
  b.height_exp = b.exponent_num;
  b.squared_value = pow(b.base, b.exponent_num) * pow(height, 2UL * b.height_exp);
  b.ceil_value = isqrt_ceil(b.squared_value);
  return b;
}

bool exceeds_bound(const Int& p, int m, int n, const Int& height) {
  if (p < 2) throw DomainError("p must be at least 2");
  return p * p > bound_rect(m, n, height).squared_value;
}

Int bound_total(int d, const Int& height) {
  if (d < 1) throw DomainError("total degree must be at least 1");
  if (height < 1) throw DomainError("height must be at least 1");
  const auto dd = static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
  return pow(Int(d), 3 * dd - 3) * pow(height, dd - 1);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kAbsolutelyIrreducible:
      return "ABSOLUTELY_IRREDUCIBLE";
    case Verdict::kReducible:
      return "REDUCIBLE";
    case Verdict::kInconclusiveRankDrop:
      return "INCONCLUSIVE_RANK_DROP";
  }
  return "UNKNOWN";
}

CertificateZ certify_char0(const PolyZ& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (f.is_constant()) throw DomainError("constant polynomials are not certified");
  CertificateZ cert{.analyzed = f};
  cert.bound = bound_for(f);
  analyze(
      f, cert, Verdict::kReducible, [](const IntMatrix& m) { return rank(m); },
      [](const IntMatrix& m) { return nullspace(m); });
  return cert;
}

CertificateFp certify_mod_p(const PolyZ& f, const Int& p) {
  const PrimeField field(p);
  Reduction red = reduce_mod(f, field);
  if (red.poly.is_constant())
    throw DomainError("f mod " + p.get_str() + " is a nonzero constant");
  CertificateFp cert{.analyzed = red.poly};
  cert.modulus = p;
  cert.degree_dropped = red.degree_dropped;
  cert.bound = bound_for(f);
  cert.exceeds_bound = cert.bound && p * p > cert.bound->squared_value;
  analyze(
      red.poly, cert, Verdict::kInconclusiveRankDrop, [](const FpMatrix& m) { return rank(m); },
      [](const FpMatrix& m) { return nullspace(m); });
  return cert;
}

void check_hadamard(const Int& det, const BoundValue& bound) {
  if (det * det > bound.squared_value)
    throw InvariantViolation("maximal minor " + det.get_str() + " exceeds the Hadamard estimate");
}

BadPrimeReport bad_primes(const PolyZ& f, std::uint64_t rho_budget, const std::vector<Int>& hint_primes) {
  const CertificateZ cert = certify_char0(f);
  if (cert.verdict != Verdict::kAbsolutelyIrreducible)
    throw DomainError("bad primes are undefined: f is reducible over Q");

  BadPrimeReport report;
  report.transposed = cert.transposed;
  report.bound = cert.bound;
  const PolyZ& a = cert.analyzed;
  if (a.deg_x() == 0) {
    report.minor = MinorWitness{{}, {}, 1};
  } else {
    const auto matrix = build_matrix(a);
    report.minor = max_minor(matrix.body, matrix.shape.cols());
    check_hadamard(report.minor.det_value, bound_rect(a.deg_x(), a.deg_y(), height(a)));
  }

  report.factorization = factor(report.minor.det_value, rho_budget);
  std::vector<Int> known;
  for (const auto& [prime, e] : report.factorization.prime_factors) known.push_back(prime);

  Int cofactor = report.factorization.cofactor;
  for (const Int& h : hint_primes) {
    if (!is_prime(h) || mpz_divisible_p(report.minor.det_value.get_mpz_t(), h.get_mpz_t()) == 0) {
      report.ignored_hints.push_back(h);
      continue;
    }
    if (std::find(known.begin(), known.end(), h) == known.end()) known.push_back(h);
    while (mpz_divisible_p(cofactor.get_mpz_t(), h.get_mpz_t()) != 0) cofactor /= h;
  }
  if (cofactor > 1 && is_prime(cofactor)) {
    if (std::find(known.begin(), known.end(), cofactor) == known.end()) known.push_back(cofactor);
    cofactor = 1;
  }
  report.cofactor_note = cofactor;
  std::sort(known.begin(), known.end());

  for (const Int& p : known) {
    PrimeCheck check{.prime = p};
    try {
      const CertificateFp mod = certify_mod_p(f, p);
      check.verdict = mod.verdict;
      check.rank = mod.rank;
      check.full_rank = mod.full_rank;
      check.degree_dropped = mod.degree_dropped;
    } catch (const DomainError&) {
      check.reduced_to_constant = true;
      check.degree_dropped = true;
    }
    if (check.verdict == Verdict::kAbsolutelyIrreducible) {
      report.ruled_out.push_back(p);
    } else {
      report.confirmed_bad.push_back(p);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace absirr
