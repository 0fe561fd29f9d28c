#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "qsep/cli.hpp"
#include "qsep/exactmath/json_io.hpp"

using namespace qsep;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_rational_list") {
  const auto v = cli::parse_rational_list("0.45,0.27,0.18,0.10");
  REQUIRE(v.size() == 4);
  CHECK(v[0] == make_rational(9, 20));
  CHECK(v[3] == make_rational(1, 10));
  CHECK(cli::parse_rational_list("1/2,1/2").size() == 2);
  CHECK_THROWS(cli::parse_rational_list("1/2,,1/2"));
}

TEST_CASE("integrate --emit prob reports 8/33") {
  const Outcome o = invoke({"integrate", "--emit", "prob"});
  REQUIRE(o.code == cli::kOk);
  const json j = json::parse(o.out);
  CHECK(j["prob"] == "8/33");
  CHECK(j["version"] == cli::kVersion);
  CHECK(j.contains("wall_clock_s"));
  CHECK(j["command"].size() == 3);
}

TEST_CASE("integrate --emit M1 matches the reference polynomial") {
  const Outcome o = invoke({"integrate", "--emit", "M1"});
  REQUIRE(o.code == cli::kOk);
  const json j = json::parse(o.out);
  CHECK(poly_from_json(j["M1"]["terms"], 1) == cli::reference_m1());
}

TEST_CASE("volumes") {
  const Outcome o = invoke({"volumes", "--n", "4"});
  REQUIRE(o.code == cli::kOk);
  const json j = json::parse(o.out);
  CHECK(symbolic_from_json(j["state_space_hs"]["exact"]) == state_space_volume_hs(4));
  CHECK(invoke({"volumes", "--n", "13"}).code == cli::kUsage);
  CHECK(invoke({"volumes", "--n", "0"}).code == cli::kUsage);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"bogus"}).code == cli::kUsage);
  CHECK(invoke({"sample", "sep", "--n", "-5"}).code == cli::kUsage);
  CHECK(invoke({"integrate", "--emit", "M4"}).code == cli::kUsage);
  CHECK(invoke({"marginal", "--spectrum", "0.5,0.5"}).code == cli::kUsage);
  CHECK(invoke({"marginal", "--spectrum", "0.1,0.2,0.3,0.4"}).code == cli::kUsage);
  CHECK(invoke({"sample", "conditioned", "--a", "1", "--n", "10"}).code == cli::kUsage);
  CHECK_FALSE(invoke({"sample", "sep", "--n", "-5"}).err.empty());
}

TEST_CASE("help exits 0") {
  const Outcome o = invoke({"--help"});
  CHECK(o.code == cli::kOk);
  CHECK(o.out.find("integrate") != std::string::npos);
}

TEST_CASE("density oracle check") {
  const Outcome o = invoke({"density", "--check-oracle", "--points", "40", "--seed", "3"});
  REQUIRE(o.code == cli::kOk);
  const json j = json::parse(o.out);
  CHECK(j["rows"].size() == 40);
  CHECK(j["max_abs_err"].get<double>() < 1e-9);
}

TEST_CASE("density CSV") {
  const Outcome o = invoke({"density", "--csv", "--grid", "3"});
  REQUIRE(o.code == cli::kOk);
  CHECK(o.out.rfind("r,s,chamber,density\n", 0) == 0);
  CHECK(std::count(o.out.begin(), o.out.end(), '\n') == 10);
}

TEST_CASE("marginal report") {
  const Outcome o = invoke({"marginal", "--spectrum", "0.45,0.27,0.18,0.10"});
  REQUIRE(o.code == cli::kOk);
  const json j = json::parse(o.out);
  CHECK(j["passed"] == true);
  CHECK(j["breakpoints"].size() == 4);
}

TEST_CASE("sample sep") {
  const Outcome o = invoke({"sample", "sep", "--n", "2000", "--seed", "5", "--threads", "2"});
  REQUIRE(o.code == cli::kOk);
  const json j = json::parse(o.out);
  CHECK(j["n"] == 2000);
  CHECK(j["seed"] == 5);
  CHECK(j.contains("stderr"));
  CHECK(j["fraction"].get<double>() > 0.15);
  CHECK(j["fraction"].get<double>() < 0.35);
}

TEST_CASE("reference polynomials agree with the computed ones") {
  CHECK(cli::reference_m1() == compute_M(1).total);
  CHECK(cli::reference_m3() == compute_M(3).total);
  CHECK(cli::reference_m_sum() == compute_M(1).total + compute_M(2).total + compute_M(3).total);
  const FPoly f = cli::reference_f();
  CHECK(f.poly == compute_f().poly);
  CHECK(f.prefactor == compute_f().prefactor);
}

TEST_CASE("check result JSON") {
  const json j = cli::to_json(cli::CheckResult{"x", true, "ok", 0.5});
  CHECK(j["name"] == "x");
  CHECK(j["passed"] == true);
}

TEST_CASE("verify exact and density suites pass") {
  for (const char* suite : {"exact", "density"}) {
    const Outcome o = invoke({"verify", suite});
    CHECK_MESSAGE(o.code == cli::kOk, suite);
    const json j = json::parse(o.out);
    CHECK(j["checks"].size() > 2);
    CHECK(j["suite"] == suite);
  }
  CHECK(invoke({"verify", "nonsense"}).code == cli::kUsage);
}
