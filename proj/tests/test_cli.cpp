#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

// Process-level checks of the installed binary; the path arrives via the
// MAGNUS_CLI environment variable set by ctest.

namespace {

struct RunResult {
  int exitCode;
  std::string out;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const char* cli = std::getenv("MAGNUS_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "MAGNUS_CLI not set");
  std::string cmd = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("cli derive emits canonical json") {
  RunResult r = run("derive --rank 2 \"x1 x2 x1^-1 x2^-1\"");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["word"] == "x1 x2 x1^-1 x2^-1");
  CHECK(j["derivatives"].size() == 2);
  CHECK(j["derivatives"][0]["terms"][0]["at"] == nlohmann::json::array({0, 0}));
  CHECK(j["derivatives"][0]["terms"][0]["coeff"] == 1);
}

TEST_CASE("cli wordproblem text output") {
  RunResult r = run("wordproblem --rank 2 --format text \"x1 x2\" \"x2 x1\"");
  CHECK(r.exitCode == 0);
  CHECK(r.out == "false\n");

  RunResult eq = run("wordproblem --rank 2 --format text \"x1 x2\" \"x1 x2\"");
  CHECK(eq.exitCode == 0);
  CHECK(eq.out == "true\n");
}

TEST_CASE("cli length of the empty word") {
  RunResult r = run("length --rank 2 \"\"");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lengthFN"] == 0);
  CHECK(j["wreathCircuit"] == 0);
  CHECK(j["wreathWalk"] == 0);
}

TEST_CASE("cli geodesic word round-trips through wordproblem") {
  RunResult geo = run("geodesic-word --rank 2 \"x1 x2 x2 x1^-1 x2^-1\"");
  CHECK(geo.exitCode == 0);
  auto j = nlohmann::json::parse(geo.out);
  std::string word = j["geodesic"];
  RunResult wp = run("wordproblem --rank 2 --format text \"" + word + "\" \"x1 x2 x2 x1^-1 x2^-1\"");
  CHECK(wp.exitCode == 0);
  CHECK(wp.out == "true\n");
}

TEST_CASE("cli parse errors name the token and exit 1") {
  RunResult r = run("flow --rank 2 \"x1 x7\"");
  CHECK(r.exitCode == 1);
  CHECK(r.out.find("token 2") != std::string::npos);
  CHECK(r.out.find("x7") != std::string::npos);
}

TEST_CASE("cli capacity errors exit 2") {
  RunResult r = run("length --rank 2 --kernel-cap 3 \"x1 x2 x1 x2\"");
  CHECK(r.exitCode == 2);
  CHECK(r.out.find("capacity") != std::string::npos);
}

TEST_CASE("cli verify-qi is byte-deterministic") {
  std::string args = "verify-qi --rank 2 --seed 7 --samples 12 --max-len 5 --oracle-radius 6";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.out == b.out);
  CHECK(a.exitCode == b.exitCode);
  CHECK((a.exitCode == 0 || a.exitCode == 1));

  RunResult csv = run(args + " --format csv");
  CHECK(csv.out.rfind("word,reducedLength,lengthFN,", 0) == 0);
}

TEST_CASE("cli oracle sentinel") {
  RunResult r = run("oracle --rank 2 --oracle-radius 1 \"x1 x2\"");
  CHECK(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["lengthFN"] == "exceeds radius");
}

TEST_CASE("cli degree guard for geodesics") {
  RunResult r = run("length --rank 2 --degree 3 \"x1\"");
  CHECK(r.exitCode == 1);
  CHECK(r.out.find("degree 2") != std::string::npos);
}
