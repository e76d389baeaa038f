// End-to-end tests driving the installed binary through a shell.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(MZV_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("expand renders the closed form in canonical order") {
  const CliResult r = run_cli("expand --n 2 --k 2 --kind harmonic");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2*z2 z2 + 1*z4\n");

  const CliResult star = run_cli("expand --n 2 --k 1 --kind star");
  CHECK(star.exit_code == 0);
  CHECK(star.output == "1*z2\n");
}

TEST_CASE("expand emits the documented json schema") {
  const CliResult r = run_cli("expand --n 2 --k 3 --kind star --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("command") == "expand");
  CHECK(j.at("inputs").at("kind") == "star");
  REQUIRE(j.at("terms").size() == 4);
  std::vector<std::string> nums;
  for (const auto& term : j.at("terms"))
    nums.push_back(term.at("coeff").at("num").get<std::string>());
  CHECK(nums == std::vector<std::string>{"6", "-3", "-3", "1"});
  CHECK(j.at("terms").at(0).at("word") == nlohmann::json({2, 2, 2}));
}

TEST_CASE("identical invocations produce identical bytes") {
  const CliResult a = run_cli("expand --n 3 --k 4 --kind star");
  const CliResult b = run_cli("expand --n 3 --k 4 --kind star");
  CHECK(a.output == b.output);

  const CliResult c = run_cli("verify main --n 2 --k 2 --trunc 2000");
  const CliResult d = run_cli("verify main --n 2 --k 2 --trunc 2000");
  CHECK(c.output == d.output);
}

TEST_CASE("eval prints value and tail bound") {
  const CliResult r = run_cli("eval zeta 2 --trunc 1000000");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("value      1.64493306") != std::string::npos);
  CHECK(r.output.find("tail_bound 1.9999") != std::string::npos);

  // pi^2/8 = 1.23370055...; at this truncation the 7th decimal still carries
  // the ~2.5e-7 tail.
  const CliResult t = run_cli("eval t 2 --trunc 1000000");
  CHECK(t.exit_code == 0);
  CHECK(t.output.find("value      1.233700") != std::string::npos);
}

TEST_CASE("eval rejects divergent compositions with a usage error") {
  const CliResult r = run_cli("eval zeta 1,1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("last part must be >= 2") != std::string::npos);
}

TEST_CASE("eval json output round-trips") {
  const CliResult r = run_cli("eval zetastar 2,3 --trunc 5000 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("inputs").at("alpha") == nlohmann::json({2, 3}));
  CHECK(j.at("value").is_number());
  CHECK(j.at("tail_bound").is_number());
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("verify theorem3 reports exact integers") {
  const CliResult r = run_cli("verify theorem3 --k 10 --ell 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("lhs=102247563") != std::string::npos);
  CHECK(r.output.find("rhs=102247563") != std::string::npos);
  CHECK(r.output.find("pass") != std::string::npos);

  const CliResult missing = run_cli("verify theorem3 --k 10");
  CHECK(missing.exit_code == 2);

  const CliResult bad = run_cli("verify theorem3 --k 10 --ell 10");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify proposition and corollary pass") {
  CHECK(run_cli("verify proposition --n 3 --k 4 --kind star").exit_code == 0);
  CHECK(run_cli("verify proposition --n 2 --k 5").exit_code == 0);
  CHECK(run_cli("verify corollary --k 5").exit_code == 0);
}

TEST_CASE("verify main passes at modest truncation and honours tolerance") {
  const CliResult ok = run_cli("verify main --n 2 --k 2 --trunc 100000 --tol 1e-4");
  CHECK(ok.exit_code == 0);

  // Nothing satisfies a negative tolerance; exercises the failure path.
  const CliResult fail = run_cli("verify main --n 2 --k 2 --trunc 1000 --tol=-1");
  CHECK(fail.exit_code == 1);
  CHECK(fail.output.find("FAIL") != std::string::npos);
  CHECK(fail.output.find("worst check") != std::string::npos);
}

TEST_CASE("verify json report follows the schema and exit discipline") {
  const CliResult r = run_cli("verify main --n 2 --k 2 --trunc 2000 --format json");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.at("schema") == 1);
  CHECK(j.at("status") == "pass");
  REQUIRE(j.at("details").size() == 2);
  for (const auto& d : j.at("details")) {
    CHECK(d.contains("name"));
    CHECK(d.contains("lhs"));
    CHECK(d.contains("rhs"));
    CHECK(d.at("difference").is_number());
    CHECK(d.at("tolerance").is_number());
    CHECK(d.at("difference").get<double>() <= d.at("tolerance").get<double>());
  }
  CHECK(nlohmann::json::parse(j.dump()) == j);

  const CliResult fail =
      run_cli("verify main --n 2 --k 2 --trunc 1000 --tol=-1 --format json");
  CHECK(fail.exit_code == 1);
  CHECK(nlohmann::json::parse(fail.output).at("status") == "fail");
}

TEST_CASE("verify hurwitz and tvalues pass, parallel output is stable") {
  const CliResult seq = run_cli("verify hurwitz --n 2 --k 2 --trunc 5000");
  CHECK(seq.exit_code == 0);
  const CliResult par = run_cli("verify hurwitz --n 2 --k 2 --trunc 5000 --parallel");
  CHECK(par.exit_code == 0);
  CHECK(par.output == seq.output);

  CHECK(run_cli("verify hurwitz --n 2 --k 2 --trunc 5000 --x 0.75").exit_code == 0);
  CHECK(run_cli("verify tvalues --n 2 --k 2 --trunc 5000").exit_code == 0);
}

TEST_CASE("count prints surjection rows, the Fubini total and the split") {
  const CliResult r = run_cli("count --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("r=1 1\n") != std::string::npos);
  CHECK(r.output.find("r=2 2\n") != std::string::npos);
  CHECK(r.output.find("total 3") != std::string::npos);

  CHECK(run_cli("count --k 3").output.find("total 13") != std::string::npos);

  const CliResult split = run_cli("count --k 4 --ell 2 --format json");
  REQUIRE(split.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(split.output);
  CHECK(j.at("total") == "75");
  CHECK(j.at("split").at("lhs") == "75");
  CHECK(j.at("split").at("rhs") == "75");
  CHECK(j.at("split").at("equal") == true);
  CHECK(j.at("rows").size() == 4);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("bogus").exit_code == 2);
  CHECK(run_cli("expand --n 0 --k 1").exit_code == 2);
  CHECK(run_cli("expand --kind sideways").exit_code == 2);
  CHECK(run_cli("eval zeta 2,x").exit_code == 2);
  CHECK(run_cli("count --k 4 --ell 9").exit_code == 2);
  CHECK(run_cli("eval hurwitz 2 --x=-1").exit_code == 2);
}
