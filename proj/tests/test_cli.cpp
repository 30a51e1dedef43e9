#include <doctest.h>

#include <sstream>

#include "rumin/cli.hpp"
#include "rumin/report.hpp"

using namespace rumin;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dims subcommand in all formats") {
  CliResult text = run({"dims", "--n", "2"});
  CHECK(text.code == 0);
  CHECK(text.out.find("1 4 5 5 4 1") != std::string::npos);

  CliResult csv = run({"dims", "--n", "1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "k,dim\n0,1\n1,2\n2,2\n3,1\n");

  CliResult json = run({"dims", "--n", "1", "--format", "json"});
  CHECK(json.code == 0);
  Report parsed = report_from_json(nlohmann::json::parse(json.out));
  CHECK(parsed.all_pass());
  CHECK(parsed.checks.size() == 1);
}

TEST_CASE("json reports round-trip byte-identically") {
  CliResult json = run({"lemma32", "--n", "2", "--format", "json"});
  CHECK(json.code == 0);
  Report parsed = report_from_json(nlohmann::json::parse(json.out));
  CHECK(render_json(parsed) == json.out);
}

TEST_CASE("exit codes distinguish parse errors from check failures") {
  // Unknown flag: usage error.
  CliResult bad_flag = run({"dims", "--banana", "2"});
  CHECK(bad_flag.code == 2);

  // Unknown subcommand.
  CliResult bad_cmd = run({"frobnicate"});
  CHECK(bad_cmd.code == 2);

  // Malformed literal.
  CliResult bad_literal = run({"rumin-d", "--n", "1", "--k", "1", "--alpha", "th[1"});
  CHECK(bad_literal.code == 2);

  // A check that genuinely fails: rumin-d above the middle on a non-member.
  CliResult fail = run({"rumin-d", "--n", "1", "--k", "2", "--alpha", "th[1,2]"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);

  // csv is reserved for dimension tables.
  CliResult bad_csv = run({"lemma32", "--n", "1", "--format", "csv"});
  CHECK(bad_csv.code == 2);
}

TEST_CASE("verification subcommands pass with exact zeros") {
  CliResult chain = run({"chain-check", "--n", "1", "--map", "shear:j=1,p=x^2", "--k", "1",
                         "--alpha", "t*th[1]", "--trials", "4"});
  CHECK(chain.code == 0);
  CHECK(chain.out.find("residual=0 (4/4)") != std::string::npos);

  CliResult weak = run({"weak-check", "--n", "1", "--k", "1", "--alpha", "t*th[1]",
                        "--trials", "3"});
  CHECK(weak.code == 0);

  CliResult j = run({"j-check", "--n", "1", "--map", "dilate:2", "--k", "2", "--trials", "3"});
  CHECK(j.code == 0);

  CliResult numeric =
      run({"pansu-numeric", "--n", "1", "--map", "shear:j=1,p=x^2", "--trials", "2"});
  CHECK(numeric.code == 0);
}

TEST_CASE("seeded runs are reproducible") {
  std::vector<std::string> args = {"chain-check", "--n", "1", "--map", "dilate:1/2",
                                   "--k", "1", "--trials", "3", "--seed", "99",
                                   "--format", "json"};
  CliResult a = run(args);
  CliResult b = run(args);
  CHECK(a.code == 0);
  // Reports differ only in runtimes; compare checks minus runtime.
  nlohmann::json ja = nlohmann::json::parse(a.out);
  nlohmann::json jb = nlohmann::json::parse(b.out);
  for (auto* doc : {&ja, &jb})
    for (auto& rec : (*doc)["checks"]) rec.erase("runtime_ms");
  CHECK(ja == jb);
}

TEST_CASE("help exits cleanly") {
  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("dims") != std::string::npos);
  CHECK(help.out.find("chain-check") != std::string::npos);
}

TEST_CASE("rumin-d prints the lift at the middle degree") {
  CliResult mid = run({"rumin-d", "--n", "1", "--k", "1", "--alpha", "t*th[1]",
                       "--format", "json"});
  CHECK(mid.code == 0);
  Report rep = report_from_json(nlohmann::json::parse(mid.out));
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].witness.at("lift").get<std::string>() == "t*th[1] - 1/2*x1*th[3]");
  CHECK(rep.checks[0].witness.at("result").get<std::string>() == "-3/2*th[1,3]");
}
