#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "relpoly/cli.hpp"
#include "relpoly/sqfree_poly.hpp"

using namespace relpoly;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly verb prints the bridge polynomial with agreement") {
  const auto r = run({"poly", "fixture:fig2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "R1*R4 + R2*R5 + R2*R3*R4 - R1*R2*R3*R4 - R1*R2*R4*R5 - R2*R3*R4*R5 + "
        "R1*R2*R3*R4*R5\nconstructions agree: true\n");
}

TEST_CASE("eval verb") {
  const auto r = run({"eval", "fixture:fig2", "--at", "1/2,1/2,1/2,1/2,1/2"});
  CHECK(r.code == 0);
  CHECK(r.out == "15/32\n");

  const auto decimal = run({"eval", "fixture:fig2", "--at", "0.9,0.9,0.9,0.9,0.9",
                            "--decimal", "5"});
  CHECK(decimal.out == "0.97119\n");
}

TEST_CASE("cuts and paths verbs") {
  const auto cuts1 = run({"cuts", "fixture:fig1"});
  CHECK(cuts1.out == "{1,2},{1,5},{2,3,4},{4,5}\n");
  const auto cuts2 = run({"cuts", "fixture:fig2"});
  CHECK(cuts2.out == "{1,2},{1,3,5},{2,4},{4,5}\n");
  const auto paths = run({"paths", "fixture:fig2", "--json"});
  CHECK(nlohmann::json::parse(paths.out) ==
        nlohmann::json::parse(R"({"paths":[[1,4],[2,3,4],[2,5]]})"));
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  CHECK(run({"paths"}).code == 2);                               // missing argument
  CHECK(run({"frobnicate", "fixture:fig2"}).code == 2);          // unknown verb
  CHECK(run({"paths", "fixture:nope"}).code == 1);               // domain error
  CHECK(run({"eval", "fixture:fig2", "--at", "1/2"}).code == 1); // wrong arity
  CHECK(run({"eval", "fixture:fig2", "--at", "3/2,0,0,0,0"}).code == 1);  // out of range
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical invocations are byte-identical") {
  const std::vector<std::string> argv = {"mc",      "fixture:fig2", "--p",
                                         "9/10,9/10,9/10,9/10,9/10", "--trials", "2000",
                                         "--seed",  "7"};
  const auto a = run(argv);
  const auto b = run(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto branches_a = run({"branches", "fixture:fig2", "--json"});
  const auto branches_b = run({"branches", "fixture:fig2", "--json"});
  CHECK(branches_a.out == branches_b.out);
}

TEST_CASE("json outputs round-trip through documented schemas") {
  const auto poly = run({"poly", "fixture:fig2", "--json"});
  const auto doc = nlohmann::json::parse(poly.out);
  CHECK(doc.at("agree").get<bool>());
  const SqFreePoly parsed = SqFreePoly::from_json(doc.at("polynomial"));
  CHECK(parsed.to_json() == doc.at("polynomial"));

  const auto window =
      run({"window", "--line", "0,1,5,0,0,3/20;1,1/2,1/3,1/4,1/5,13/40", "--json"});
  CHECK(nlohmann::json::parse(window.out) ==
        nlohmann::json::parse(R"({"empty":false,"lo":"-1/15","hi":"2/15"})"));
}

TEST_CASE("window verb text output") {
  const auto r = run({"window", "--line", "0,1,5,0,0,3/20;1,1/2,1/3,1/4,1/5,13/40"});
  CHECK(r.out == "[-1/15, 2/15]\n");
}

TEST_CASE("levelcheck verb") {
  CHECK(run({"levelcheck", "fixture:fig2", "--c", "0", "--fix", "R1=0,R2=0"}).out == "true\n");
  CHECK(run({"levelcheck", "fixture:fig2", "--c", "0", "--fix", "R1=0"}).out == "false\n");
}

TEST_CASE("diag verb") {
  const auto counts = run({"diag", "fixture:fig2", "--k", "3", "--json"});
  CHECK(nlohmann::json::parse(counts.out).at("count").get<int>() == 50);
  const auto diag = run({"diag", "fixture:fig2", "--pattern", "1,1,1,1,1"});
  CHECK(diag.out == "2*x^2 + x^3 - 3*x^4 + x^5\n");
}

TEST_CASE("RELPOLY_SEED provides the default Monte Carlo seed") {
  setenv("RELPOLY_SEED", "12345", 1);
  const auto from_env = run({"mc", "fixture:fig2", "--p", "1/2,1/2,1/2,1/2,1/2",
                             "--trials", "500"});
  unsetenv("RELPOLY_SEED");
  const auto explicit_seed = run({"mc", "fixture:fig2", "--p", "1/2,1/2,1/2,1/2,1/2",
                                  "--trials", "500", "--seed", "12345"});
  CHECK(from_env.out == explicit_seed.out);
  CHECK(from_env.out.find("seed 12345") != std::string::npos);
}

TEST_CASE("critical and hessian verbs") {
  CHECK(run({"critical", "fixture:fig2", "--verify"}).out == "critical family verified: true\n");
  CHECK(run({"critical", "fixture:fig2", "--family", "0,0,s,0,0"}).out ==
        "critical family verified: true\n");
  CHECK(run({"critical", "fixture:fig2", "--family", "1/2,1/2,1/2,1/2,1/2"}).out ==
        "critical family verified: false\n");
  CHECK(run({"hessian", "fixture:fig2", "--at", "0,0,1/3,0,0"}).out == "indefinite\n");
}
