#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef POLARFOL_CLI_PATH
#error "POLARFOL_CLI_PATH must be defined"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(POLARFOL_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("cli: info reports dimension and rank") {
  const RunResult r = run_cli("info sl2r --format md");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("dim 3") != std::string::npos);
  CHECK(r.output.find("rank 1") != std::string::npos);

  const RunResult su = run_cli("info su21 --format md");
  CHECK(su.exit_code == 0);
  CHECK(su.output.find("dim 8") != std::string::npos);
  CHECK(su.output.find("dim g_a = 2") != std::string::npos);
  CHECK(su.output.find("dim g_2a = 1") != std::string::npos);
}

TEST_CASE("cli: unknown family exits 2 and lists valid names") {
  const RunResult r = run_cli("info nosuch");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("unknown family") != std::string::npos);
  CHECK(r.output.find("sl2r") != std::string::npos);
  CHECK(r.output.find("so25") != std::string::npos);
}

TEST_CASE("cli: classify sl2r emits exactly one candidate, case D, all green") {
  const RunResult r = run_cli("classify sl2r");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("schema") == "polarfol/1");
  REQUIRE(j.at("reports").size() == 1);
  CHECK(j.at("reports")[0].at("spec").at("case") == "D");
  CHECK(j.at("reports")[0].at("matches_expectation") == true);
}

TEST_CASE("cli: classify bundles are byte-identical for equal seeds") {
  const RunResult a = run_cli("classify sl3r --seed 5");
  const RunResult b = run_cli("classify sl3r --seed 5");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  // And the seed is recorded in the bundle.
  const auto j = nlohmann::json::parse(a.output);
  CHECK(j.at("seed") == 5);
}

TEST_CASE("cli: POLARFOL_SEED provides the default seed") {
  RunResult with_env;
  {
    const std::string cmd =
        std::string("POLARFOL_SEED=5 ") + POLARFOL_CLI_PATH + " classify sl3r 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) with_env.output.append(buf.data(), n);
    with_env.exit_code = WEXITSTATUS(pclose(pipe));
  }
  CHECK(with_env.exit_code == 0);
  const auto j = nlohmann::json::parse(with_env.output);
  CHECK(j.at("seed") == 5);
  const RunResult flag = run_cli("classify sl3r --seed 5");
  CHECK(with_env.output == flag.output);
}

TEST_CASE("cli: verify case D on su21 certifies the expected report") {
  const RunResult r = run_cli("verify su21 --case D --root 0");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  const auto& rep = j.at("report");
  CHECK(rep.at("is_polar") == true);
  CHECK(rep.at("is_hyperpolar") == false);
  CHECK(rep.at("mean_curvature_coeff") == "3");
  CHECK(rep.at("extension_verified") == true);
  CHECK(rep.at("section_curvature") == "-1/12");
}

TEST_CASE("cli: verify case E on sl3r fails with the named clause, exit 2") {
  const RunResult r = run_cli("verify sl3r --case E --root 0");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("no abelian plane in g_alpha") != std::string::npos);
}

TEST_CASE("cli: verify case C on sl3r fails orthogonality, exit 2") {
  const RunResult r = run_cli("verify sl3r --case C --root 0 --root2 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("simple roots not orthogonal") != std::string::npos);
}

TEST_CASE("cli: verify case C on sl4r succeeds exactly for the disconnected pair") {
  // In the canonical ordering the A3 simple roots (1,-2,1) and (1,0,1) are
  // the orthogonal pair, indices 1 and 2.
  const RunResult good = run_cli("verify sl4r --case C --root 1 --root2 2");
  CHECK(good.exit_code == 0);
  const auto j = nlohmann::json::parse(good.output);
  CHECK(j.at("report").at("is_hyperpolar") == true);
  const RunResult bad = run_cli("verify sl4r --case C --root 0 --root2 1");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli: case E orbit values at rational t") {
  const RunResult r = run_cli("verify so25 --case E --root 1 --t 0 --t 1 --t 1/2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  REQUIRE(j.at("orbit").size() == 3);
  for (const auto& o : j.at("orbit")) CHECK(o.at("matches_closed_form") == true);
  // t = 0 leaves the minimal orbit.
  bool all_zero = true;
  for (const auto& c : j.at("orbit")[0].at("mean_curvature"))
    all_zero = all_zero && c.get<std::string>() == "0";
  CHECK(all_zero);
}

TEST_CASE("cli: --t on a non-E case exits 2") {
  const RunResult r = run_cli("verify su21 --case D --root 0 --t 1");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: hyperpolar cases A and B verify green") {
  const RunResult a = run_cli("verify so25 --case A");
  CHECK(a.exit_code == 0);
  CHECK(nlohmann::json::parse(a.output).at("report").at("is_hyperpolar") == true);
  const RunResult b = run_cli("verify so25 --case B --root 0 --seed 3");
  CHECK(b.exit_code == 0);
  CHECK(nlohmann::json::parse(b.output).at("report").at("is_hyperpolar") == true);
  // Case A on a rank-one space is impossible.
  const RunResult bad = run_cli("verify su21 --case A");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("rank >= 2") != std::string::npos);
}
