#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

#ifndef DCLIFF_CLI_PATH
#error "DCLIFF_CLI_PATH must name the CLI executable"
#endif

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with the given arguments, capturing stdout; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = std::string("\"") + DCLIFF_CLI_PATH + "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("weights for a single spec") {
  const auto r = cli("weights --m 4 --k 1 --spec \"L+ L- L+ L+\"");
  CHECK(r.status == 0);
  CHECK(r.out == "(3/2, 1/2)\n");
}

TEST_CASE("weights JSON uses fraction strings") {
  const auto r = cli("weights --m 4 --k 1 --spec \"L+ L- L+ L+\" --out json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.dump().find("\"3/2\"") != std::string::npos);
}

TEST_CASE("verify corollary1 as JSON") {
  const auto r = cli("verify corollary1 --m 4 --k 2 --out json");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(r.out == cli("verify corollary1 --m 4 --k 2 --out json").out);
}

TEST_CASE("spinor orbit DOT graph for m = 4") {
  const auto r = cli("spinor-orbit --m 4 --start \"L+ L+ L+ L+\" --out dot");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("\"L+ L+ L+ L+\" [") != std::string::npos);
  CHECK(r.out.find("\"L+ L- L- L+\" [") != std::string::npos);
}

TEST_CASE("hwv-count agreement") {
  const auto r = cli("hwv-count --m 4 --k 2");
  CHECK(r.status == 0);
  CHECK(r.out.find("64") != std::string::npos);
}

TEST_CASE("dims for m = 2, k = 1") {
  const auto r = cli("dims --m 2 --k 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("16") != std::string::npos);
}

TEST_CASE("bracket table for m = 3") {
  const auto r = cli("bracket-table --m 3");
  CHECK(r.status == 0);
  CHECK(!r.out.empty());
}

TEST_CASE("failing checks exit 1") {
  CHECK(cli("verify orbits --m 5").status == 1);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(cli("weights --m 4 --k 1 --spec \"L+ X+ L+ L+\"").status == 2);
  CHECK(cli("weights --m 4 --k 1 --spec \"L+ L+\"").status == 2);
  CHECK(cli("verify nosuch").status == 2);
  CHECK(cli("verify lemma1 --m 3").status == 2);
  CHECK(cli("verify corollary1 --out dot").status == 2);
  CHECK(cli("verify corollary1 --mode random").status == 2);
  CHECK(cli("--bogus").status == 2);
  CHECK(cli("--help").status == 0);
}
