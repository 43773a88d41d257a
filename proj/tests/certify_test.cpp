#include <gtest/gtest.h>

#include <algorithm>

#include "absirr/certify.hpp"
#include "absirr/family.hpp"
#include "absirr/parse.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

namespace absirr {
namespace {

using testing::read_corpus;

PolyZ P(const char* text) { return parse_poly(text); }

const Int kNinthPrime("186940255267545011");
const char* const kNinthPoly = "x^9*y-9*x^9-2*x+9*y+2";

std::vector<PolyZ> irreducible_corpus() {
  std::vector<PolyZ> out;
  for (const std::string& line : read_corpus("irreducible.txt")) out.push_back(parse_poly(line));
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}})
    for (int ell = 2; ell <= 6; ++ell) out.push_back(family_poly(m, n, ell));
  return out;
}

TEST(BoundRect, NinthDegreeExample) {
  const BoundValue b = bound_rect(9, 1, 9);
  EXPECT_EQ(b.base, 18);
  EXPECT_EQ(b.exponent_num, 18u);
  EXPECT_EQ(b.height_exp, 18u);
  EXPECT_EQ(b.squared_value, pow(Int(18), 18) * pow(Int(9), 36));
  EXPECT_EQ(b.ceil_value, pow(Int(18), 9) * pow(Int(9), 18));
  EXPECT_TRUE(b.exact());
}

TEST(BoundRect, SmallestCase) {
  const BoundValue b = bound_rect(1, 1, 1);
  EXPECT_EQ(b.base, 2);
  EXPECT_EQ(b.squared_value, 4);
  EXPECT_EQ(b.ceil_value, 2);
}

TEST(BoundRect, HalfIntegerExponent) {
  const BoundValue b = bound_rect(1, 2, 1);
  EXPECT_EQ(b.base, 14);
  EXPECT_EQ(b.exponent_num, 5u);
  EXPECT_EQ(b.squared_value, 537824);
  // 733^2 = 537289 < 14^5 <= 538756 = 734^2.
  EXPECT_EQ(b.ceil_value, 734);
  EXPECT_FALSE(b.exact());
}

TEST(BoundRect, CeilingBracketsTheSquare) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      for (int h : {1, 2, 7}) {
        const BoundValue b = bound_rect(m, n, h);
        EXPECT_EQ(b.squared_value, pow(b.base, b.exponent_num) * pow(Int(h), 2UL * b.height_exp));
        EXPECT_GE(b.ceil_value * b.ceil_value, b.squared_value);
        EXPECT_LT((b.ceil_value - 1) * (b.ceil_value - 1), b.squared_value);
      }
    }
  }
}

TEST(BoundRect, Domain) {
  EXPECT_THROW(bound_rect(0, 1, 1), DomainError);
  EXPECT_THROW(bound_rect(1, 0, 1), DomainError);
  EXPECT_THROW(bound_rect(1, 1, 0), DomainError);
}

TEST(ExceedsBound, Examples) {
  EXPECT_TRUE(exceeds_bound(3, 1, 1, 1));
  EXPECT_FALSE(exceeds_bound(2, 1, 1, 1));
  EXPECT_FALSE(exceeds_bound(kNinthPrime, 9, 1, 9));
  EXPECT_TRUE(exceeds_bound(734, 1, 2, 1));
  EXPECT_FALSE(exceeds_bound(733, 1, 2, 1));
  EXPECT_THROW(exceeds_bound(1, 1, 1, 1), DomainError);
}

TEST(BoundTotal, Examples) {
  EXPECT_EQ(bound_total(1, 5), 1);
  EXPECT_EQ(bound_total(2, 1), 512);
  EXPECT_EQ(bound_total(2, 3), 13824);
  EXPECT_THROW(bound_total(0, 1), DomainError);
  EXPECT_THROW(bound_total(2, 0), DomainError);
}

TEST(CertifyChar0, Examples) {
  const CertificateZ a = certify_char0(P("x*y+1"));
  EXPECT_EQ(a.verdict, Verdict::kAbsolutelyIrreducible);
  EXPECT_EQ(a.rank, 2u);
  EXPECT_EQ(a.full_rank, 2u);
  EXPECT_FALSE(a.witness.has_value());
  EXPECT_FALSE(a.modulus.has_value());

  const CertificateZ b = certify_char0(P("(x+1)*(y+1)"));
  EXPECT_EQ(b.verdict, Verdict::kReducible);
  EXPECT_EQ(b.rank, 1u);
  EXPECT_EQ(b.full_rank, 2u);
  ASSERT_TRUE(b.witness.has_value());
  // Proportional to r = -(1+y), s = 0; normalized with a positive leading entry.
  EXPECT_EQ(b.witness->r, P("1+y"));
  EXPECT_TRUE(b.witness->s.is_zero());

  const CertificateZ c = certify_char0(P(kNinthPoly));
  EXPECT_EQ(c.verdict, Verdict::kAbsolutelyIrreducible);
  EXPECT_EQ(c.rank, 18u);
  EXPECT_EQ(c.full_rank, 18u);
}

TEST(CertifyChar0, Errors) {
  EXPECT_THROW(certify_char0(P("x-x")), ZeroPolynomialError);
  EXPECT_THROW(certify_char0(P("7")), DomainError);
}

TEST(CertifyChar0, TransposesWhenFreeOfY) {
  const CertificateZ a = certify_char0(P("x+1"));
  EXPECT_TRUE(a.transposed);
  EXPECT_EQ(a.verdict, Verdict::kAbsolutelyIrreducible);
  EXPECT_EQ(a.analyzed, P("y+1"));

  const CertificateZ b = certify_char0(P("x^2+1"));
  EXPECT_TRUE(b.transposed);
  EXPECT_EQ(b.verdict, Verdict::kReducible);
  ASSERT_TRUE(b.witness.has_value());
  EXPECT_TRUE(expand_form(b.analyzed, *b.witness).is_zero());
  EXPECT_FALSE(b.bound.has_value());
}

TEST(CertifyChar0, SumOfSquaresIsNotAbsolutelyIrreducible) {
  // Irreducible over Q, but (x + iy)(x - iy) over Q(i).
  const CertificateZ c = certify_char0(P("x^2+y^2"));
  EXPECT_EQ(c.verdict, Verdict::kReducible);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(expand_form(c.analyzed, *c.witness).is_zero());
}

TEST(CertifyChar0, IrreducibleCorpus) {
  for (const PolyZ& f : irreducible_corpus()) {
    const CertificateZ c = certify_char0(f);
    EXPECT_EQ(c.verdict, Verdict::kAbsolutelyIrreducible) << print_canonical(f);
    EXPECT_EQ(c.rank, c.full_rank);
  }
}

TEST(CertifyChar0, ProductCorpus) {
  for (const std::string& line : read_corpus("products.txt")) {
    const PolyZ f = parse_poly(line);
    const CertificateZ c = certify_char0(f);
    EXPECT_EQ(c.verdict, Verdict::kReducible) << line;
    EXPECT_LT(c.rank, c.full_rank);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_FALSE(c.witness->is_zero());
    EXPECT_TRUE(expand_form(c.analyzed, *c.witness).is_zero()) << line;
  }
}

TEST(CertifyModP, NinthDegreeBadPrime) {
  const CertificateFp c = certify_mod_p(P(kNinthPoly), kNinthPrime);
  EXPECT_EQ(c.verdict, Verdict::kInconclusiveRankDrop);
  EXPECT_EQ(c.rank, 17u);
  EXPECT_EQ(c.full_rank, 18u);
  EXPECT_FALSE(c.exceeds_bound);
  EXPECT_FALSE(c.degree_dropped);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_TRUE(expand_form(c.analyzed, *c.witness).is_zero());
}

TEST(CertifyModP, AboveTheBound) {
  const CertificateFp c = certify_mod_p(P("x*y+1"), 5);
  EXPECT_EQ(c.verdict, Verdict::kAbsolutelyIrreducible);
  EXPECT_EQ(c.rank, 2u);
  EXPECT_TRUE(c.exceeds_bound);
  ASSERT_TRUE(c.bound.has_value());
  EXPECT_EQ(c.bound->ceil_value, 2);
  EXPECT_EQ(*c.modulus, 5);
}

TEST(CertifyModP, FamilyMemberAtItsPrime) {
  const CertificateFp c = certify_mod_p(family_poly(2, 1, 3), 109);
  EXPECT_EQ(c.verdict, Verdict::kInconclusiveRankDrop);
  EXPECT_LT(c.rank, 4u);
  EXPECT_EQ(c.full_rank, 4u);
}

TEST(CertifyModP, DegreeDropRebuildsForReducedDegrees) {
  const CertificateFp c = certify_mod_p(P("3*x^2*y+x*y+1"), 3);
  EXPECT_TRUE(c.degree_dropped);
  EXPECT_EQ(c.analyzed, reduce_mod(P("x*y+1"), PrimeField(3)).poly);
  EXPECT_EQ(c.full_rank, 2u);
  EXPECT_EQ(c.verdict, Verdict::kAbsolutelyIrreducible);
}

TEST(CertifyModP, Errors) {
  EXPECT_THROW(certify_mod_p(P("3*x*y+3"), 3), ZeroPolynomialError);
  EXPECT_THROW(certify_mod_p(P("3*x*y+1"), 3), DomainError);
  EXPECT_THROW(certify_mod_p(P("x*y+1"), 4), DomainError);
}

TEST(CertifyModP, PrimesAboveTheBoundKeepIrreducibility) {
  for (const PolyZ& f : irreducible_corpus()) {
    const BoundValue b = bound_rect(f.deg_x(), f.deg_y(), height(f));
    Int p = b.ceil_value;
    for (int k = 0; k < 5; ++k) {
      p = next_prime(p);
      ASSERT_TRUE(exceeds_bound(p, f.deg_x(), f.deg_y(), height(f)));
      const CertificateFp c = certify_mod_p(f, p);
      EXPECT_FALSE(c.degree_dropped);
      EXPECT_TRUE(c.exceeds_bound);
      EXPECT_EQ(c.verdict, Verdict::kAbsolutelyIrreducible) << print_canonical(f) << " p=" << p;
    }
  }
}

TEST(BadPrimes, UnitMinorHasNoBadPrimes) {
  const BadPrimeReport r = bad_primes(P("x*y+1"));
  EXPECT_EQ(abs(r.minor.det_value), 1);
  EXPECT_TRUE(r.confirmed_bad.empty());
  EXPECT_TRUE(r.ruled_out.empty());
  EXPECT_EQ(r.cofactor_note, 1);
}

TEST(BadPrimes, NinthDegreeWithHint) {
  const BadPrimeReport r = bad_primes(P(kNinthPoly), 0, {kNinthPrime});
  EXPECT_EQ(r.minor.det_value % kNinthPrime, 0);
  EXPECT_NE(std::find(r.confirmed_bad.begin(), r.confirmed_bad.end(), kNinthPrime), r.confirmed_bad.end());
  for (const Int& p : r.confirmed_bad) EXPECT_EQ(r.minor.det_value % p, 0);
}

TEST(BadPrimes, FamilyPrime) {
  const BadPrimeReport r = bad_primes(family_poly(2, 1, 3));
  EXPECT_EQ(r.minor.det_value % 109, 0);
  EXPECT_NE(std::find(r.confirmed_bad.begin(), r.confirmed_bad.end(), Int(109)), r.confirmed_bad.end());
}

TEST(BadPrimes, ReportInvariantsOverTheCorpus) {
  for (const PolyZ& f : irreducible_corpus()) {
    const BadPrimeReport r = bad_primes(f);
    const BoundValue b = bound_rect(f.deg_x(), f.deg_y(), height(f));
    EXPECT_LE(r.minor.det_value * r.minor.det_value, b.squared_value) << print_canonical(f);
    EXPECT_EQ(r.factorization.product(), abs(r.minor.det_value));

    std::vector<Int> known;
    for (const auto& [p, e] : r.factorization.prime_factors) known.push_back(p);
    std::vector<Int> sorted_union = r.confirmed_bad;
    sorted_union.insert(sorted_union.end(), r.ruled_out.begin(), r.ruled_out.end());
    std::sort(sorted_union.begin(), sorted_union.end());
    EXPECT_EQ(sorted_union, known) << print_canonical(f);

    for (const PrimeCheck& c : r.checks) {
      const bool bad = std::find(r.confirmed_bad.begin(), r.confirmed_bad.end(), c.prime) != r.confirmed_bad.end();
      EXPECT_EQ(bad, c.verdict != Verdict::kAbsolutelyIrreducible || c.reduced_to_constant);
    }
    EXPECT_TRUE(std::is_sorted(r.confirmed_bad.begin(), r.confirmed_bad.end()));
  }
}

TEST(BadPrimes, EveryRankDropDividesTheMinor) {
  // Scan all small primes; any rank drop must come from a prime dividing D.
  for (const char* text : {"x*y+1", "x^2*y+x+1", "y^2+x*(x+1)", "y^3+x*y+x", "3*x^2-2*x+2+(x^2-3)*y"}) {
    const PolyZ f = parse_poly(text);
    const BadPrimeReport r = bad_primes(f);
    for (Int p = 2; p < 400; p = next_prime(p)) {
      bool dropped = false;
      try {
        dropped = certify_mod_p(f, p).verdict != Verdict::kAbsolutelyIrreducible;
      } catch (const DomainError&) {
        continue;
      }
      if (dropped) {
        EXPECT_EQ(r.minor.det_value % p, 0) << text << " p=" << p;
        EXPECT_NE(std::find(r.confirmed_bad.begin(), r.confirmed_bad.end(), p), r.confirmed_bad.end());
      }
    }
  }
}

TEST(BadPrimes, HintsAreVerifiedNotTrusted) {
  const BadPrimeReport r = bad_primes(family_poly(2, 1, 3), 10'000'000, {Int(109), Int(7), Int(15)});
  EXPECT_NE(std::find(r.confirmed_bad.begin(), r.confirmed_bad.end(), Int(109)), r.confirmed_bad.end());
  EXPECT_NE(std::find(r.ignored_hints.begin(), r.ignored_hints.end(), Int(15)), r.ignored_hints.end());
}

TEST(BadPrimes, Errors) {
  EXPECT_THROW(bad_primes(P("(x+1)*(y+1)")), DomainError);
  EXPECT_THROW(bad_primes(P("5")), DomainError);
}

TEST(Hadamard, ViolationIsAnInvariantFailure) {
  const BoundValue b = bound_rect(1, 1, 1);
  EXPECT_NO_THROW(check_hadamard(2, b));
  EXPECT_NO_THROW(check_hadamard(-2, b));
  EXPECT_THROW(check_hadamard(3, b), InvariantViolation);
}

TEST(Verdict, Names) {
  EXPECT_EQ(to_string(Verdict::kAbsolutelyIrreducible), "ABSOLUTELY_IRREDUCIBLE");
  EXPECT_EQ(to_string(Verdict::kReducible), "REDUCIBLE");
  EXPECT_EQ(to_string(Verdict::kInconclusiveRankDrop), "INCONCLUSIVE_RANK_DROP");
}

}  // namespace
}  // namespace absirr
