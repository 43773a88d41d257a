#include "absirr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "absirr/certify.hpp"
#include "absirr/errors.hpp"
#include "absirr/family.hpp"
#include "absirr/oracle.hpp"
#include "absirr/parse.hpp"

namespace absirr::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string poly;
  std::string prime;
  std::string height;
  std::string ell;
  std::string ell_min;
  std::string ell_max;
  int m = 0;
  int n = 0;
  int ext = 1;
  std::optional<int> total_degree;
  std::uint64_t rho_budget = 10'000'000;
  std::vector<std::string> hints;
};

Int parse_integer(const std::string& text, const std::string& flag) {
  const bool digits = !text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
  if (!digits) throw DomainError(flag + " expects a nonnegative integer, got '" + text + "'");
  return Int(text);
}

std::string str(const Int& v) { return v.get_str(); }

Json optional_str(const std::optional<Int>& v) { return v ? Json(str(*v)) : Json(nullptr); }

// The exponent on the base, (2mn+n-1)/2, written as an integer or a fraction.
std::string base_exponent(unsigned num) {
  return num % 2 == 0 ? std::to_string(num / 2) : std::to_string(num) + "/2";
}

std::string power_text(const Int& base, const std::string& exponent) {
  if (exponent.find('/') != std::string::npos) return str(base) + "^(" + exponent + ")";
  return str(base) + "^" + exponent;
}

std::string factorization_text(const FactorizationResult& fr) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : fr.prime_factors) {
    if (!first) os << " * ";
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  if (fr.cofactor != 1) os << (first ? "" : " * ") << '[' << fr.cofactor << ']';
  else if (first) os << '1';
  return os.str();
}

std::string join(const std::vector<Int>& values) {
  if (values.empty()) return "none";
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? " " : "") << values[i];
  return os.str();
}

Json str_array(const std::vector<Int>& values) {
  Json a = Json::array();
  for (const Int& v : values) a.push_back(str(v));
  return a;
}

void cmd_bound(const Options& o, std::ostream& out) {
  const Int height = parse_integer(o.height, "-H");
  const BoundValue b = bound_rect(o.m, o.n, height);
  std::optional<Int> total;
  if (o.total_degree) total = bound_total(*o.total_degree, height);
  const std::string exponent = base_exponent(b.exponent_num);

  if (o.json) {
    Json j;
    j["m"] = b.m;
    j["n"] = b.n;
    j["height"] = str(height);
    j["base"] = str(b.base);
    j["exponent"] = exponent;
    j["height_exponent"] = b.height_exp;
    j["squared_value"] = str(b.squared_value);
    j["ceil_value"] = str(b.ceil_value);
    j["exact"] = b.exact();
    j["total_degree"] = o.total_degree ? Json(*o.total_degree) : Json(nullptr);
    j["total_degree_bound"] = optional_str(total);
    out << j.dump() << '\n';
    return;
  }
  out << "base " << b.base << '\n';
  out << "exponent " << exponent << '\n';
  out << "bound " << power_text(b.base, exponent) << '*' << height << '^' << b.height_exp << '\n';
  if (b.exact()) {
    out << "value " << b.ceil_value << '\n';
  } else {
    out << "value^2 " << b.squared_value << '\n';
    out << "ceiling " << b.ceil_value << '\n';
  }
  if (total) {
    const long d = *o.total_degree;
    out << "total-degree bound " << d << '^' << 3 * d * d - 3 << '*' << height << '^' << d * d - 1 << " = " << *total
        << '\n';
  }
}

template <CoefficientRing R>
void emit_matrix(const Bivariate<R>& f, const std::optional<Int>& modulus, bool json, std::ostream& out) {
  if (f.deg_x() == 0 || f.deg_y() == 0)
    throw DomainError("the criterion matrix needs deg_x f >= 1 and deg_y f >= 1 (swap x and y if deg_y f = 0)");
  const CriterionMatrix<R> rm = build_matrix(f);
  const CriterionShape& shape = rm.shape;
  const R& ring = f.ring();

  if (json) {
    Json j;
    j["polynomial"] = print_canonical(f);
    j["modulus"] = optional_str(modulus);
    j["rows"] = shape.rows();
    j["cols"] = shape.cols();
    Json rows = Json::array();
    for (std::size_t r = 0; r < shape.rows(); ++r) rows.push_back(shape.row_label(r));
    Json cols = Json::array();
    for (std::size_t c = 0; c < shape.cols(); ++c) cols.push_back(shape.col_label(c));
    j["row_labels"] = std::move(rows);
    j["col_labels"] = std::move(cols);
    Json entries = Json::array();
    for (std::size_t r = 0; r < shape.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < shape.cols(); ++c) row.push_back(ring.format(rm.body(r, c)));
      entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    out << j.dump() << '\n';
    return;
  }
  out << "M(f) for f = " << print_canonical(f);
  if (modulus) out << " over F_" << *modulus;
  out << '\n' << "shape " << shape.rows() << " x " << shape.cols() << '\n';
  out << "columns";
  for (std::size_t c = 0; c < shape.cols(); ++c) out << ' ' << shape.col_label(c);
  out << '\n';
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    out << shape.row_label(r) << ':';
    for (std::size_t c = 0; c < shape.cols(); ++c) out << ' ' << ring.format(rm.body(r, c));
    out << '\n';
  }
}

void cmd_matrix(const Options& o, std::ostream& out) {
  const PolyZ f = parse_poly(o.poly);
  if (o.prime.empty()) {
    emit_matrix(f, std::nullopt, o.json, out);
    return;
  }
  const Int p = parse_integer(o.prime, "-p");
  emit_matrix(reduce_mod(f, PrimeField(p)).poly, p, o.json, out);
}

template <CoefficientRing R>
void emit_certificate(const Certificate<R>& c, bool json, std::ostream& out) {
  const std::optional<Int> bound = c.bound ? std::optional<Int>(c.bound->ceil_value) : std::nullopt;
  if (json) {
    Json j;
    j["verdict"] = std::string(to_string(c.verdict));
    j["rank"] = c.rank;
    j["full_rank"] = c.full_rank;
    j["modulus"] = optional_str(c.modulus);
    if (c.witness) {
      j["witness"] = Json{{"r", print_canonical(c.witness->r)}, {"s", print_canonical(c.witness->s)}};
    } else {
      j["witness"] = nullptr;
    }
    j["bound"] = optional_str(bound);
    j["exceeds_bound"] = c.exceeds_bound;
    j["degree_dropped"] = c.degree_dropped;
    j["transposed"] = c.transposed;
    out << j.dump() << '\n';
    return;
  }
  out << to_string(c.verdict) << " rank " << c.rank << '/' << c.full_rank;
  if (c.modulus) {
    out << " (p=" << *c.modulus;
    if (!bound) out << ", no bound: f has degree 0 in x or y)";
    else out << (c.exceeds_bound ? " exceeds bound " : " does not exceed bound ") << *bound << ')';
  }
  out << '\n';
  if (c.modulus) out << "reduced f = " << print_canonical(c.analyzed) << '\n';
  if (c.witness) {
    out << "witness r = " << print_canonical(c.witness->r) << '\n';
    out << "witness s = " << print_canonical(c.witness->s) << '\n';
  }
  if (!c.modulus && bound) out << "bound " << *bound << '\n';
  if (c.degree_dropped) out << "degree dropped mod " << *c.modulus << '\n';
  if (c.transposed) out << "transposed: x and y swapped, witness refers to " << print_canonical(c.analyzed) << '\n';
}

void cmd_certify(const Options& o, std::ostream& out) {
  const PolyZ f = parse_poly(o.poly);
  if (o.prime.empty()) {
    emit_certificate(certify_char0(f), o.json, out);
  } else {
    emit_certificate(certify_mod_p(f, parse_integer(o.prime, "-p")), o.json, out);
  }
}

void cmd_bad_primes(const Options& o, std::ostream& out) {
  const PolyZ f = parse_poly(o.poly);
  std::vector<Int> hints;
  for (const std::string& h : o.hints) hints.push_back(parse_integer(h, "--hint"));
  const BadPrimeReport r = bad_primes(f, o.rho_budget, hints);

  if (o.json) {
    Json j;
    j["det"] = str(r.minor.det_value);
    j["row_indices"] = r.minor.row_indices;
    j["col_indices"] = r.minor.col_indices;
    Json factors = Json::array();
    for (const auto& [p, e] : r.factorization.prime_factors) factors.push_back(Json{{"prime", str(p)}, {"exponent", e}});
    j["factors"] = std::move(factors);
    j["budget_exhausted"] = r.factorization.budget_exhausted;
    j["cofactor"] = str(r.cofactor_note);
    j["confirmed_bad"] = str_array(r.confirmed_bad);
    j["ruled_out"] = str_array(r.ruled_out);
    Json checks = Json::array();
    for (const PrimeCheck& c : r.checks) {
      checks.push_back(Json{{"prime", str(c.prime)},
                            {"verdict", std::string(to_string(c.verdict))},
                            {"rank", c.rank},
                            {"full_rank", c.full_rank},
                            {"degree_dropped", c.degree_dropped},
                            {"reduced_to_constant", c.reduced_to_constant}});
    }
    j["checks"] = std::move(checks);
    j["ignored_hints"] = str_array(r.ignored_hints);
    j["transposed"] = r.transposed;
    j["bound"] = r.bound ? Json(str(r.bound->ceil_value)) : Json(nullptr);
    out << j.dump() << '\n';
    return;
  }
  out << "minor det D = " << r.minor.det_value << " (" << r.minor.row_indices.size() << " x "
      << r.minor.col_indices.size() << ")\n";
  out << "factorization " << factorization_text(r.factorization) << '\n';
  if (r.factorization.budget_exhausted) out << "rho budget exhausted\n";
  for (const PrimeCheck& c : r.checks) {
    out << "p=" << c.prime << ' ';
    if (c.reduced_to_constant) out << "f reduces to a constant";
    else out << to_string(c.verdict) << " rank " << c.rank << '/' << c.full_rank;
    if (c.degree_dropped) out << " degree dropped";
    out << '\n';
  }
  out << "confirmed bad: " << join(r.confirmed_bad) << '\n';
  out << "ruled out: " << join(r.ruled_out) << '\n';
  out << "unfactored cofactor: " << r.cofactor_note << '\n';
  if (!r.ignored_hints.empty()) out << "ignored hints: " << join(r.ignored_hints) << '\n';
  if (r.transposed) out << "transposed: x and y swapped\n";
}

Json family_json(const FamilyInstance& fi) {
  Json j;
  j["m"] = fi.m;
  j["n"] = fi.n;
  j["ell"] = str(fi.ell);
  j["f"] = print_canonical(fi.f);
  j["g_value"] = str(fi.g_value);
  j["g_is_prime"] = fi.g_is_prime;
  j["height"] = str(fi.height);
  j["split_root"] = optional_str(fi.split_root);
  j["split_divides"] = fi.split_divides;
  j["inequality_holds"] = fi.inequality_holds;
  if (fi.reduction) {
    j["reduction"] = Json{{"verdict", std::string(to_string(fi.reduction->verdict))},
                          {"rank", fi.reduction->rank},
                          {"full_rank", fi.reduction->full_rank}};
  } else {
    j["reduction"] = nullptr;
  }
  return j;
}

void family_human(const FamilyInstance& fi, std::ostream& out) {
  out << "f = " << print_canonical(fi.f) << '\n';
  out << "g_" << fi.m << '(' << fi.ell << ") = " << fi.g_value << (fi.g_is_prime ? " prime" : " not prime") << '\n';
  out << "height " << fi.height << '\n';
  if (!fi.g_is_prime) return;
  const Int& p = fi.g_value;
  if (fi.split_root) {
    out << "split root " << *fi.split_root << ": x - " << *fi.split_root
        << (fi.split_divides ? " divides" : " does not divide") << " f mod " << p << '\n';
  } else {
    out << "split root: none in characteristic 2\n";
  }
  out << p << " >= " << fi.height << '^' << 2 * fi.m << ": " << (fi.inequality_holds ? "yes" : "no") << '\n';
  if (fi.reduction)
    out << "mod " << p << ": " << to_string(fi.reduction->verdict) << " rank " << fi.reduction->rank << '/'
        << fi.reduction->full_rank << '\n';
}

void cmd_family(const Options& o, std::ostream& out) {
  const FamilyInstance fi = family_instance(o.m, o.n, parse_integer(o.ell, "-l"));
  if (o.json) {
    out << family_json(fi).dump() << '\n';
  } else {
    family_human(fi, out);
  }
}

void cmd_search(const Options& o, std::ostream& out) {
  const Int lo = parse_integer(o.ell_min, "--l-min");
  const Int hi = parse_integer(o.ell_max, "--l-max");
  const std::vector<FamilyInstance> hits = bouniakowsky_search(o.m, o.n, lo, hi);
  if (o.json) {
    Json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["l_min"] = str(lo);
    j["l_max"] = str(hi);
    Json list = Json::array();
    for (const FamilyInstance& fi : hits) list.push_back(family_json(fi));
    j["hits"] = std::move(list);
    out << j.dump() << '\n';
    return;
  }
  for (const FamilyInstance& fi : hits) {
    out << "l=" << fi.ell << " p=" << fi.g_value;
    if (fi.split_root) out << " u=" << *fi.split_root << " split " << (fi.split_divides ? "yes" : "no");
    if (fi.reduction)
      out << ' ' << to_string(fi.reduction->verdict) << " rank " << fi.reduction->rank << '/' << fi.reduction->full_rank;
    out << " p>=H^" << 2 * fi.m << ' ' << (fi.inequality_holds ? "yes" : "no") << '\n';
  }
  out << hits.size() << " prime value" << (hits.size() == 1 ? "" : "s") << " of g_" << o.m << " for l in [" << lo
      << ", " << hi << "]\n";
}

std::string field_text(const SmallField& field) {
  std::ostringstream os;
  os << "F_" << field.size();
  if (field.degree() == 1) return os.str();
  const auto [b, c] = field.modulus_poly();
  os << " = F_" << field.characteristic_int() << "[a]/(a^2";
  if (b == 1) os << "+a";
  else if (b > 1) os << '+' << b << "*a";
  if (c > 0) os << '+' << c;
  os << ')';
  return os.str();
}

void cmd_oracle(const Options& o, std::ostream& out) {
  const PolyZ f = parse_poly(o.poly);
  const Int p = parse_integer(o.prime, "-p");
  if (p > 9) throw DomainError("oracle scope: p^k must be at most 9");
  const PolyFp fp = reduce_mod(f, PrimeField(p)).poly;
  if (fp.is_constant()) throw DomainError("f mod " + str(p) + " is constant");
  const OracleVerdict v = brute_factor(fp, o.ext);
  const bool found = v.status == OracleVerdict::Status::kFactorFound;
  const std::string status = found ? "FACTOR_FOUND" : "NO_FACTOR_WITHIN_SCOPE";

  if (o.json) {
    Json j;
    j["status"] = status;
    j["field"] = field_text(v.field);
    j["field_size"] = v.field.size();
    j["polynomial"] = print_canonical(fp);
    j["g"] = found ? Json(print_canonical(*v.g)) : Json(nullptr);
    j["h"] = found ? Json(print_canonical(*v.h)) : Json(nullptr);
    j["max_deg_x"] = v.max_deg_x;
    j["max_deg_y"] = v.max_deg_y;
    out << j.dump() << '\n';
    return;
  }
  out << status << " over " << field_text(v.field);
  if (!found) out << " (all splittings of bidegree (" << v.max_deg_x << "," << v.max_deg_y << "))";
  out << '\n';
  if (found) {
    out << "g = " << print_canonical(*v.g) << '\n';
    out << "h = " << print_canonical(*v.h) << '\n';
  }
}

}  // namespace

int report_failure(std::exception_ptr failure, std::ostream& err) {
  try {
    std::rethrow_exception(failure);
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
  } catch (...) {
    err << "internal error: unknown exception\n";
  }
  return kExitInternal;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Absolute irreducibility certificates for bivariate integer polynomials", "absirr"};
  app.require_subcommand(1, 1);
  Options o;

  auto* bound = app.add_subcommand("bound", "Evaluate the prime bound for bidegree (m, n) and height H");
  bound->add_option("-m", o.m, "x-degree")->required();
  bound->add_option("-n", o.n, "y-degree")->required();
  bound->add_option("-H", o.height, "height")->required();
  bound->add_option("--total-degree", o.total_degree, "also evaluate the total-degree bound");
  bound->add_flag("--json", o.json, "emit JSON");

  auto* matrix = app.add_subcommand("matrix", "Print the criterion matrix M(f)");
  matrix->add_option("poly", o.poly, "polynomial in x and y")->required();
  matrix->add_option("-p,--prime", o.prime, "reduce modulo this prime");
  matrix->add_flag("--json", o.json, "emit JSON");

  auto* certify = app.add_subcommand("certify", "Certify absolute irreducibility over Q or modulo p");
  certify->add_option("poly", o.poly, "polynomial in x and y")->required();
  certify->add_option("-p,--prime", o.prime, "work modulo this prime");
  certify->add_flag("--json", o.json, "emit JSON");

  auto* bad = app.add_subcommand("bad-primes", "Find the primes at which the criterion matrix loses rank");
  bad->add_option("poly", o.poly, "polynomial in x and y")->required();
  bad->add_option("--rho-budget", o.rho_budget, "Pollard rho iteration budget")->capture_default_str();
  bad->add_option("--hint", o.hints, "candidate prime factor of the minor (repeatable)")->allow_extra_args(false);
  bad->add_flag("--json", o.json, "emit JSON");

  auto* family = app.add_subcommand("family", "Inspect one member of the family (l x^m - 2x + 2) + (x^m - l) y^n");
  family->add_option("-m", o.m, "m")->required();
  family->add_option("-n", o.n, "n")->required();
  family->add_option("-l", o.ell, "l >= 2")->required();
  family->add_flag("--json", o.json, "emit JSON");

  auto* search = app.add_subcommand("search", "Find l in a range with g_m(l) prime");
  search->add_option("-m", o.m, "m")->required();
  search->add_option("-n", o.n, "n")->required();
  search->add_option("--l-min", o.ell_min, "smallest l")->required();
  search->add_option("--l-max", o.ell_max, "largest l")->required();
  search->add_flag("--json", o.json, "emit JSON");

  auto* oracle = app.add_subcommand("oracle", "Brute-force factor search over F_p or F_{p^2}");
  oracle->add_option("poly", o.poly, "polynomial in x and y")->required();
  oracle->add_option("-p,--prime", o.prime, "prime, p^ext <= 9")->required();
  oracle->add_option("--ext", o.ext, "extension degree")->check(CLI::IsMember({1, 2}));
  oracle->add_flag("--json", o.json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (bound->parsed()) cmd_bound(o, out);
    else if (matrix->parsed()) cmd_matrix(o, out);
    else if (certify->parsed()) cmd_certify(o, out);
    else if (bad->parsed()) cmd_bad_primes(o, out);
    else if (family->parsed()) cmd_family(o, out);
    else if (search->parsed()) cmd_search(o, out);
    else if (oracle->parsed()) cmd_oracle(o, out);
  } catch (...) {
    return report_failure(std::current_exception(), err);
  }
  return kExitOk;
}

}  // namespace absirr::cli
