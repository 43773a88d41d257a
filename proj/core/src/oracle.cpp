#include "absirr/oracle.hpp"

#include "absirr/linalg.hpp"
#include "absirr/numtheory.hpp"

namespace absirr {
namespace {

// h with f = g*h and deg h <= deg f - deg g, found by solving for the
// coefficients of h.
template <Field F>
std::optional<Bivariate<F>> solve_quotient(const Bivariate<F>& g, const Bivariate<F>& f) {
  const F& field = f.ring();
  if (f.is_zero()) return Bivariate<F>(field);
  const int fx = f.deg_x();
  const int fy = f.deg_y();
  const int hx = fx - g.deg_x();
  const int hy = fy - g.deg_y();
  if (hx < 0 || hy < 0) return std::nullopt;

  const auto eq = [&](int i, int j) { return static_cast<std::size_t>(i * (fy + 1) + j); };
  const auto unknown = [&](int a, int b) { return static_cast<std::size_t>(a * (hy + 1) + b); };
  Matrix<F> system(field, static_cast<std::size_t>((fx + 1) * (fy + 1)),
                   static_cast<std::size_t>((hx + 1) * (hy + 1)));
  std::vector<typename F::value_type> rhs(system.rows(), field.zero());
  for (int i = 0; i <= fx; ++i)
    for (int j = 0; j <= fy; ++j) rhs[eq(i, j)] = f.coeff(i, j);
  for (int a = 0; a <= hx; ++a)
    for (int b = 0; b <= hy; ++b)
      for (int i = 0; i <= g.deg_x(); ++i)
        for (int j = 0; j <= g.deg_y(); ++j) system(eq(i + a, j + b), unknown(a, b)) = g.coeff(i, j);

  const auto x = solve(system, std::span<const typename F::value_type>(rhs));
  if (!x) return std::nullopt;
  std::vector<std::vector<typename F::value_type>> rows(static_cast<std::size_t>(hx + 1));
  for (int a = 0; a <= hx; ++a)
    for (int b = 0; b <= hy; ++b) rows[a].push_back((*x)[unknown(a, b)]);
  auto h = Bivariate<F>::from_rows(field, rows);
  if (!(g * h == f)) throw InvariantViolation("linear solve returned a non-quotient");
  return h;
}

void require_divisor(const auto& g) {
  if (g.is_zero()) throw ZeroPolynomialError("divisor is the zero polynomial");
  if (g.is_constant()) throw DomainError("divisor must be nonconstant");
}

}  // namespace

SmallField::SmallField(int p, int k) : p_(p), k_(k) {
  if (k != 1 && k != 2) throw DomainError("extension degree must be 1 or 2");
  if (p < 2 || !is_prime(Int(p))) throw DomainError(std::to_string(p) + " is not prime");
  if (size() > 64) throw DomainError("field too large for the brute-force oracle");
  if (k == 1) return;
  for (int b = 0; b < p; ++b) {
    for (int c = 0; c < p; ++c) {
      bool has_root = false;
      for (int t = 0; t < p && !has_root; ++t) has_root = (t * t + b * t + c) % p == 0;
      if (!has_root) {
        b_ = b;
        c_ = c;
        return;
      }
    }
  }
  throw InvariantViolation("no irreducible quadratic found");
}

SmallField::Element SmallField::from_int(const Int& v) const {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p_));
  return {static_cast<int>(r.get_si()), 0};
}

SmallField::Element SmallField::mul(const Element& a, const Element& b) const {
  // a^2 = -b_ a - c_
  const int hi = a.c1 * b.c1;
  return {mod(a.c0 * b.c0 - c_ * hi), mod(a.c0 * b.c1 + a.c1 * b.c0 - b_ * hi)};
}

SmallField::Element SmallField::inv(const Element& a) const {
  if (is_zero(a)) throw DomainError("zero has no inverse");
  for (int e = 1; e < size(); ++e) {
    const Element cand = element(e);
    if (mul(a, cand) == one()) return cand;
  }
  throw InvariantViolation("element without inverse in a field");
}

std::string SmallField::format(const Element& a) const {
  if (a.c1 == 0) return std::to_string(a.c0);
  const std::string root = a.c1 == 1 ? "a" : std::to_string(a.c1) + "*a";
  if (a.c0 == 0) return root;
  return "(" + std::to_string(a.c0) + "+" + root + ")";
}

bool divides_fp(const PolyFp& g, const PolyFp& f) {
  if (!(g.ring() == f.ring())) throw ModulusMismatchError();
  require_divisor(g);
  return solve_quotient(g, f).has_value();
}

std::optional<PolySmall> exact_quotient(const PolySmall& g, const PolySmall& f) {
  if (!(g.ring() == f.ring())) throw ModulusMismatchError();
  if (g.is_zero()) throw ZeroPolynomialError("divisor is the zero polynomial");
  return solve_quotient(g, f);
}

PolySmall lift_to_small(const PolyFp& f, const SmallField& field) {
  if (f.ring().modulus() != field.characteristic_int())
    throw ModulusMismatchError();
  return f.map_coefficients(field, [](const Int& a) { return SmallField::Element{static_cast<int>(a.get_si()), 0}; });
}

OracleVerdict brute_factor(const PolyFp& f, int ext_degree) {
  if (f.is_zero()) throw ZeroPolynomialError();
  if (ext_degree != 1 && ext_degree != 2) throw DomainError("extension degree must be 1 or 2");
  const Int& p = f.ring().modulus();
  if (pow(p, static_cast<unsigned long>(ext_degree)) > 9)
    throw DomainError("oracle scope: field size p^k must be at most 9");
  const int dx = f.deg_x();
  const int dy = f.deg_y();
  if ((dx + 1) * (dy + 1) > 9)
    throw DomainError("oracle scope: (deg_x+1)(deg_y+1) must be at most 9");

  const SmallField field(static_cast<int>(p.get_si()), ext_degree);
  OracleVerdict verdict{OracleVerdict::Status::kNoFactorWithinScope, field, std::nullopt, std::nullopt, dx, dy};
  const PolySmall target = lift_to_small(f, field);
  const int q = field.size();

  for (int a = 0; a <= dx; ++a) {
    for (int b = 0; b <= dy; ++b) {
      const std::pair<int, int> side{a, b};
      const std::pair<int, int> other{dx - a, dy - b};
      if (side == std::pair{0, 0} || other == std::pair{0, 0}) continue;
      if (other < side) continue;  // this split was handled from the other side
      const int side_terms = (a + 1) * (b + 1);
      const int other_terms = (other.first + 1) * (other.second + 1);
      const auto [ea, eb] = other_terms < side_terms ? other : side;
      const int terms = (ea + 1) * (eb + 1);

      std::vector<int> digits(static_cast<std::size_t>(terms), 0);
      for (;;) {
        // Advance the odometer; the last digit is least significant.
        int pos = terms - 1;
        while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];

        std::size_t first = 0;
        while (digits[first] == 0) ++first;
        if (digits[first] != 1) continue;
        std::vector<std::vector<SmallField::Element>> rows(static_cast<std::size_t>(ea + 1));
        for (int i = 0; i <= ea; ++i)
          for (int j = 0; j <= eb; ++j) rows[i].push_back(field.element(digits[i * (eb + 1) + j]));
        const PolySmall cand = PolySmall::from_rows(field, rows);
        if (cand.deg_x() != ea || cand.deg_y() != eb) continue;
        if (auto h = exact_quotient(cand, target)) {
          verdict.status = OracleVerdict::Status::kFactorFound;
          verdict.g = cand;
          verdict.h = std::move(*h);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

}  // namespace absirr
