#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include "symdet/json_io.hpp"

// Drives the installed command-line binary end to end; the path is injected
// by the build as SYMDET_CLI_PATH.

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SYMDET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

symdet::Json json_of(const CliResult& r) { return symdet::parse_json_text(r.out); }

}  // namespace

TEST_CASE("symmetrized determinant subcommand prints the known golden") {
  const CliResult r =
      run_cli(R"(group det --sym --spec '{"family":"cyclic","n":3}')");
  REQUIRE(r.exit_code == 0);
  const symdet::Json j = json_of(r);
  CHECK(j.at("seed") == 12648430);  // default seed, echoed in the header
  CHECK(j.at("determinant") == "a^3 - 3*a*b^2 + 2*b^3");
  CHECK(j.at("legend").at("names") == symdet::Json::array({"a", "b"}));

  const CliResult full =
      run_cli(R"(group det --spec '{"family":"cyclic","n":2}')");
  REQUIRE(full.exit_code == 0);
  CHECK(json_of(full).at("determinant") == "a^2 - b^2");
}

TEST_CASE("coset matrix subcommand embeds the legend") {
  const CliResult r = run_cli(
      R"(group coset-matrix --spec '{"family":"cyclic","n":6}' --subgroup '{"generators":[3]}')");
  REQUIRE(r.exit_code == 0);
  const symdet::Json j = json_of(r);
  CHECK(j.at("k") == 3);
  CHECK(j.at("matrix") ==
        symdet::parse_json_text(
            R"([["a","b","b"],["b","a","b"],["b","b","a"]])"));
  CHECK(j.at("legend").at("classes").at(0).at("elements") ==
        symdet::Json::array({"0", "3"}));
}

TEST_CASE("eigenform subcommand reports forms with verification") {
  const CliResult r = run_cli(R"(eig linear --spec '{"family":"cyclic","n":3}')");
  REQUIRE(r.exit_code == 0);
  const symdet::Json forms = json_of(r).at("eigenforms");
  REQUIRE(forms.size() == 2);
  CHECK(forms.at(0).at("form") == "a - b");
  CHECK(forms.at(0).at("multiplicity") == 2);
  CHECK(forms.at(0).at("verification").at("kind") == "symbolic");
  CHECK(forms.at(1).at("form") == "a + 2*b");

  const CliResult sampled = run_cli(
      R"(eig linear --spec '{"family":"cyclic","n":3}' --mode sampled)");
  REQUIRE(sampled.exit_code == 0);
  CHECK(json_of(sampled).at("eigenforms").at(0).at("verification").at("kind") ==
        "probabilistic");
}

TEST_CASE("projective eigenform subcommand prints the table row") {
  const CliResult r = run_cli("psl2 lambda --p 5");
  REQUIRE(r.exit_code == 0);
  const symdet::Json j = json_of(r);
  CHECK(j.at("lambda") == "a - b - c + d");
  CHECK(j.at("multiplicity_bound") == 5);
  CHECK(j.at("legend").at("names").size() == 4);
}

TEST_CASE("fillrank subcommand matches the documented report shape") {
  const CliResult r = run_cli(
      R"(fillrank --spec '{"group":{"family":"cyclic","n":3},"subgroup":{"generators":[]},"values":{"a":"0","b":"1"}}')");
  REQUIRE(r.exit_code == 0);
  const symdet::Json j = json_of(r);
  CHECK(j.at("slopes") ==
        symdet::parse_json_text(
            R"([{"m":1,"n":-1,"fillrank":2},{"m":1,"n":2,"fillrank":1}])"));
  CHECK(j.at("k") == 3);
  CHECK(j.at("residual_degrees") == symdet::Json::array());

  const CliResult identity = run_cli(
      R"(fillrank --spec '{"group":{"family":"cyclic","n":3},"subgroup":{"generators":[]},"values":{"a":"1","b":"0"}}')");
  REQUIRE(identity.exit_code == 0);
  CHECK(json_of(identity).at("slopes") ==
        symdet::parse_json_text(R"([{"m":1,"n":1,"fillrank":3}])"));
}

TEST_CASE("slope polynomial subcommand factors through the scan") {
  const CliResult r = run_cli(
      R"(slope poly --pair '{"a":[["1","0"],["0","1"]],"b":[["2","0"],["0","3"]]}')");
  REQUIRE(r.exit_code == 0);
  const symdet::Json j = json_of(r);
  CHECK(j.at("polynomial") == "6*x^2 - 5*x*y + y^2");
  CHECK(j.at("degree") == 2);
  CHECK(j.at("degenerate") == false);
  REQUIRE(j.at("slopes").size() == 2);
  CHECK(j.at("slopes").at(0).at("n") == 2);
}

TEST_CASE("identity verification distinguishes pass from failure by exit code") {
  const CliResult ok = run_cli(
      R"(verify identities --matrix '[["3","5","9","5"],["5","3","5","9"],["9","5","3","5"],["5","9","5","3"]]' --spec '{"family":"cyclic","n":4}')");
  REQUIRE(ok.exit_code == 0);
  const symdet::Json j = json_of(ok);
  CHECK(j.at("all_ok") == true);
  CHECK(j.at("recovered") ==
        symdet::parse_json_text(R"({"a":"3","b":"5","c":"9"})"));

  const CliResult bad = run_cli(
      R"(verify identities --matrix '[["3","5","9","5"],["5","3","5","9"],["9","5","3","5"],["5","9","5","4"]]' --spec '{"family":"cyclic","n":4}')");
  CHECK(bad.exit_code == 3);
  CHECK(json_of(bad).at("all_ok") == false);
}

TEST_CASE("worked example regression subcommand passes") {
  const CliResult r = run_cli("verify worked-examples");
  REQUIRE(r.exit_code == 0);
  const symdet::Json j = json_of(r);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("checks").size() == 13);  // nine determinants + four table rows
  for (const auto& check : j.at("checks")) CHECK(check.at("pass") == true);
}

TEST_CASE("input problems exit with code 1") {
  CHECK(run_cli(R"(group det --spec '{"family":"icosahedral"}')").exit_code == 1);
  CHECK(run_cli(R"(group det --spec '{bad json')").exit_code == 1);
  CHECK(run_cli("totally-unknown-subcommand").exit_code == 1);
  CHECK(run_cli(
            R"(fillrank --spec '{"group":{"family":"cyclic","n":3},"subgroup":{"generators":[]},"values":{"a":"1"}}')")
            .exit_code == 1);
  CHECK(run_cli(R"(group det --spec /nonexistent/path.json)").exit_code == 1);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  const std::string cmd =
      R"(eig linear --spec '{"family":"quaternion"}' --seed 77)";
  const CliResult a = run_cli(cmd);
  const CliResult b = run_cli(cmd);
  const CliResult c = run_cli(cmd + " --threads 7");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(json_of(a).at("seed") == 77);

  const std::string fill =
      R"(fillrank --spec '{"group":{"family":"dihedral","n":3},"subgroup":{"generators":[3]},"values":{"a":"2","b":"-1/3"}}')";
  const CliResult f1 = run_cli(fill);
  const CliResult f2 = run_cli(fill + " --threads 3");
  REQUIRE(f1.exit_code == 0);
  CHECK(f1.out == f2.out);
}

TEST_CASE("text format leads with the seed header") {
  const CliResult r = run_cli(
      R"(group det --sym --spec '{"family":"cyclic","n":3}' --format text --seed 5)");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("seed: 5\n", 0) == 0);
  CHECK(r.out.find("determinant: a^3 - 3*a*b^2 + 2*b^3\n") != std::string::npos);
}
