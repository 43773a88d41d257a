#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "absirr/cli.hpp"
#include "absirr/errors.hpp"

namespace absirr {
namespace {

using Json = nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome o = invoke(std::move(args));
  EXPECT_EQ(o.code, 0) << o.err;
  return Json::parse(o.out);
}

TEST(CliBound, Json) {
  const Json j = invoke_json({"bound", "-m", "1", "-n", "2", "-H", "1"});
  EXPECT_EQ(j["base"], "14");
  EXPECT_EQ(j["exponent"], "5/2");
  EXPECT_EQ(j["squared_value"], "537824");
  EXPECT_EQ(j["ceil_value"], "734");
  EXPECT_FALSE(j["exact"].get<bool>());
  EXPECT_TRUE(j["total_degree_bound"].is_null());
}

TEST(CliBound, TotalDegree) {
  const Json j = invoke_json({"bound", "-m", "1", "-n", "1", "-H", "1", "--total-degree", "2"});
  EXPECT_EQ(j["base"], "2");
  EXPECT_EQ(j["ceil_value"], "2");
  EXPECT_TRUE(j["exact"].get<bool>());
  EXPECT_EQ(j["total_degree_bound"], "512");
}

TEST(CliCertify, ExampleOverQ) {
  const Json j = invoke_json({"certify", "x*y+1"});
  EXPECT_EQ(j["verdict"], "ABSOLUTELY_IRREDUCIBLE");
  EXPECT_EQ(j["rank"], 2);
  EXPECT_EQ(j["full_rank"], 2);
  EXPECT_TRUE(j["modulus"].is_null());
  EXPECT_TRUE(j["witness"].is_null());
  EXPECT_EQ(j["bound"], "2");
  EXPECT_FALSE(j["transposed"].get<bool>());
}

TEST(CliCertify, ModPAboveTheBound) {
  const Json j = invoke_json({"certify", "x*y+1", "-p", "5"});
  EXPECT_EQ(j["verdict"], "ABSOLUTELY_IRREDUCIBLE");
  EXPECT_EQ(j["modulus"], "5");
  EXPECT_TRUE(j["exceeds_bound"].get<bool>());
  const Outcome human = invoke({"certify", "x*y+1", "-p", "5"});
  EXPECT_EQ(human.code, 0);
  EXPECT_NE(human.out.find("ABSOLUTELY_IRREDUCIBLE rank 2/2 (p=5 exceeds bound 2)"), std::string::npos);
}

TEST(CliCertify, ReducibleHasAWitness) {
  const Json j = invoke_json({"certify", "x^2-y^2"});
  EXPECT_EQ(j["verdict"], "REDUCIBLE");
  ASSERT_TRUE(j["witness"].is_object());
  EXPECT_TRUE(j["witness"]["r"].is_string());
  EXPECT_TRUE(j["witness"]["s"].is_string());
}

TEST(CliCertify, BadPrimeIsInconclusive) {
  const Json j = invoke_json({"certify", "x^9*y-9*x^9-2*x+9*y+2", "-p", "186940255267545011"});
  EXPECT_EQ(j["verdict"], "INCONCLUSIVE_RANK_DROP");
  EXPECT_EQ(j["rank"], 17);
  EXPECT_EQ(j["full_rank"], 18);
  EXPECT_FALSE(j["exceeds_bound"].get<bool>());
}

TEST(CliCertify, UnivariateIsTransposed) {
  const Json j = invoke_json({"certify", "x^2+1"});
  EXPECT_TRUE(j["transposed"].get<bool>());
  EXPECT_EQ(j["verdict"], "REDUCIBLE");
}

TEST(CliMatrix, LabelsAndEntries) {
  const Json j = invoke_json({"matrix", "x*y+1"});
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["cols"], 2);
  EXPECT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["row_labels"].size(), 2u);
  EXPECT_EQ(j["col_labels"].size(), 2u);
  const Json k = invoke_json({"matrix", "x^9*y-9*x^9-2*x+9*y+2", "-p", "7"});
  EXPECT_EQ(k["rows"], 18);
  EXPECT_EQ(k["cols"], 18);
  EXPECT_EQ(k["modulus"], "7");
}

TEST(CliBadPrimes, HintIsConfirmed) {
  const Json j = invoke_json({"bad-primes", "x^9*y-9*x^9-2*x+9*y+2", "--hint", "186940255267545011",
                              "--rho-budget", "1000"});
  bool found = false;
  for (const auto& p : j["confirmed_bad"]) found = found || p == "186940255267545011";
  EXPECT_TRUE(found);
  EXPECT_TRUE(j["ignored_hints"].empty());
  EXPECT_TRUE(j["checks"].is_array());
}

TEST(CliFamily, Example) {
  const Json j = invoke_json({"family", "-m", "2", "-n", "1", "-l", "3"});
  EXPECT_EQ(j["g_value"], "109");
  EXPECT_TRUE(j["g_is_prime"].get<bool>());
  EXPECT_EQ(j["split_root"], "60");
  EXPECT_TRUE(j["split_divides"].get<bool>());
  EXPECT_TRUE(j["inequality_holds"].get<bool>());
  EXPECT_NE(j["reduction"]["verdict"], "ABSOLUTELY_IRREDUCIBLE");
}

TEST(CliSearch, QuadraticFamily) {
  const Json j = invoke_json({"search", "-m", "2", "-n", "1", "--l-min", "2", "--l-max", "50"});
  std::vector<std::string> ells;
  for (const auto& hit : j["hits"]) ells.push_back(hit["ell"].get<std::string>());
  EXPECT_EQ(ells, (std::vector<std::string>{"3", "5", "27", "33", "43", "45"}));
}

TEST(CliOracle, Examples) {
  const Json a = invoke_json({"oracle", "x^2+y^2", "-p", "3", "--ext", "2"});
  EXPECT_EQ(a["status"], "FACTOR_FOUND");
  EXPECT_EQ(a["field"], "F_9 = F_3[a]/(a^2+1)");
  EXPECT_EQ(a["field_size"], 9);
  const Json b = invoke_json({"oracle", "x*y+1", "-p", "2"});
  EXPECT_EQ(b["status"], "NO_FACTOR_WITHIN_SCOPE");
  EXPECT_TRUE(b["g"].is_null());
}

TEST(CliDeterminism, SameOutputTwice) {
  const std::vector<std::vector<std::string>> runs{
      {"certify", "x^9*y-9*x^9-2*x+9*y+2", "--json"},
      {"bad-primes", "3*x^2-2*x+2+(x^2-3)*y", "--json"},
      {"search", "-m", "3", "-n", "2", "--l-min", "2", "--l-max", "20", "--json"},
      {"oracle", "x^2+y^2", "-p", "3", "--ext", "2"},
      {"matrix", "x^2*y+y+x"},
  };
  for (const auto& args : runs) {
    const Outcome first = invoke(args);
    const Outcome second = invoke(args);
    EXPECT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
  }
}

TEST(CliVerdicts, HumanAndJsonAgree) {
  for (const char* poly : {"x*y+1", "x^2-y^2", "x^9*y-9*x^9-2*x+9*y+2", "(x+y)*(x-y+1)", "x^3+y^2"}) {
    const Json j = invoke_json({"certify", poly});
    const Outcome human = invoke({"certify", poly});
    EXPECT_EQ(human.out.rfind(j["verdict"].get<std::string>(), 0), 0u) << poly;
  }
}

TEST(CliExitCodes, DomainErrorsAreOne) {
  EXPECT_EQ(invoke({"certify", "x*y+"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"certify", "x*y+1", "--bogus"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"certify", "0"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"certify", "x*y+1", "-p", "4"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"bad-primes", "x^2-y^2"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"oracle", "x*y+1", "-p", "5", "--ext", "2"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"oracle", "x*y+1", "-p", "3", "--ext", "3"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"family", "-m", "2", "-n", "1", "-l", "1"}).code, cli::kExitDomain);
  EXPECT_EQ(invoke({"bound", "-m", "0", "-n", "1", "-H", "1"}).code, cli::kExitDomain);
  const Outcome o = invoke({"certify", "x*y+"});
  EXPECT_FALSE(o.err.empty());
  EXPECT_TRUE(o.out.empty());
}

TEST(CliExitCodes, HelpIsZero) {
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"certify", "--help"}).code, cli::kExitOk);
}

TEST(CliExitCodes, ReportFailureMapping) {
  std::ostringstream err;
  EXPECT_EQ(cli::report_failure(std::make_exception_ptr(InvariantViolation("broken")), err), cli::kExitInternal);
  EXPECT_EQ(cli::report_failure(std::make_exception_ptr(DomainError("bad")), err), cli::kExitDomain);
  EXPECT_EQ(cli::report_failure(std::make_exception_ptr(ParseError(3, "bad")), err), cli::kExitDomain);
  EXPECT_EQ(cli::report_failure(std::make_exception_ptr(std::runtime_error("other")), err), cli::kExitInternal);
  EXPECT_NE(err.str().find("broken"), std::string::npos);
}

}  // namespace
}  // namespace absirr
