// Exercises the installed CLI binary end to end. The path comes from the
// SPECTRA_CLI environment variable set by ctest.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SPECTRA_CLI");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("rho command") {
  const auto res = run_cli("rho --family C(7) --alpha 0.3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("rho 1.000000") != std::string::npos);
  CHECK(res.out.find("method power") != std::string::npos);
  CHECK(res.out.find("residual") != std::string::npos);

  const auto table_row = run_cli("rho --family Inf(5,5,5) --alpha 0.5");
  CHECK(table_row.exit_code == 0);
  CHECK(table_row.out.find("rho 1.312823") != std::string::npos);

  const auto json = run_cli("rho --family C(4) --alpha 0.2 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"rho\":") != std::string::npos);
}

TEST_CASE("rho failures use the documented exit codes") {
  CHECK(run_cli("rho --alpha 0.3").exit_code == 2);                    // no family
  CHECK(run_cli("rho --family C(1) --alpha 0.3").exit_code == 2);     // invalid family
  CHECK(run_cli("rho --family 'PB(2,1)' --alpha 0.3").exit_code == 2);  // not strongly connected
  CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("charpoly command prints the value pair") {
  const auto res = run_cli("charpoly --family 'Th(2,1;4)' --x 2.0 --alpha 0.3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("closed ") != std::string::npos);
  CHECK(res.out.find("oracle ") != std::string::npos);
}

TEST_CASE("table commands") {
  const auto single = run_cli("table1 --m 6 --alpha 0.0 --top 10");
  CHECK(single.exit_code == 0);
  CHECK(single.out.find("1,\"Inf(2,2,2)\"") != std::string::npos);
  CHECK(single.out.find("2,") == std::string::npos);  // singleton family

  const auto twice_a = run_cli("table2 --m 12 --s 3 --t 2 --alpha 0.6 --top 3");
  const auto twice_b = run_cli("table2 --m 12 --s 3 --t 2 --alpha 0.6 --top 3");
  CHECK(twice_a.exit_code == 0);
  CHECK(twice_a.out == twice_b.out);  // byte-identical reruns
}

TEST_CASE("verify command and exit codes") {
  const auto ok = run_cli("verify inf_max --m 15 --alpha 0.5");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"verified\":true") != std::string::npos);

  const auto first_four = run_cli("verify first_four --n 4 --alpha 0.5");
  CHECK(first_four.exit_code == 0);

  CHECK(run_cli("verify nosuch").exit_code == 2);
  CHECK(run_cli("verify inf_max --alpha 0.5").exit_code == 2);  // missing m
}

TEST_CASE("conjecture command emits CSV") {
  const auto res = run_cli("conjecture --n-lo 6 --n-hi 7 --alphas 0.55,0.75");
  CHECK(res.exit_code == 0);
  CHECK(res.out.rfind("n,alpha,rho_theta31,rho_theta_hat,gap,boundary", 0) == 0);
}

TEST_CASE("dump and load round trip") {
  const std::string path = "/tmp/spectra_cli_dump.json";
  const auto dump = run_cli("rho --family 'R(3,2)' --alpha 0.2 --dump " + path);
  CHECK(dump.exit_code == 0);
  const auto load = run_cli("rho --load " + path + " --alpha 0.2");
  CHECK(load.exit_code == 0);
  CHECK(load.out == dump.out);
  std::remove(path.c_str());
}
