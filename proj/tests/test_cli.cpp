#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("HURWITZ_CLI");
  return p ? p : "";
}

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + cli_path() + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  int st = pclose(f);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli exit codes") {
  if (cli_path().empty()) SKIP("HURWITZ_CLI not set");
  REQUIRE(run("classify 13").code == 0);
  REQUIRE(run("classify 11").code == 2);
  REQUIRE(run("chartable 11").code == 2);
  REQUIRE(run("ld 13 0 0 0 0").code == 3);
  REQUIRE(run("ld 13 -1 0 0 6").code == 3);
  REQUIRE(run("degeq 13 -2 1 2 6").code == 0);  // deg K is fine for degeq
  REQUIRE(run("ld 13 -2 1 2 6").code == 3);     // but special for ld
  REQUIRE(run("ld 13 -2 1 2 6 --allow-special").code == 0);
  REQUIRE(run("induced 13 5 1").code == 64);
  REQUIRE(run("induced 13 7 0").code == 64);
  REQUIRE(run("nonsense 1").code == 64);
  REQUIRE(run("ld 13").code == 64);          // missing divisor
  REQUIRE(run("ld 13 1001 0 0 0").code == 64);  // coefficient out of range
  REQUIRE(run("ld 13 1000 0 0 0").code == 0);
  REQUIRE(run("--help").code == 0);
  REQUIRE(run("ld --help").code == 0);
}

TEST_CASE("cli json output") {
  if (cli_path().empty()) SKIP("HURWITZ_CLI not set");
  RunResult r = run("--format json ld 13 0 0 0 1");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["command"] == "ld");
  REQUIRE(j["q"] == 13);
  REQUIRE(j["dim"] == 143);
  REQUIRE(j["dimension_identity"] == true);
  REQUIRE(j["decomposition"].size() == 9);

  RunResult c = run("--format json classify 11");
  REQUIRE(c.code == 2);
  json cj = json::parse(c.out);
  REQUIRE(cj["admissible"] == false);

  RunResult g = run("--format json gamma 13");
  json gj = json::parse(g.out);
  REQUIRE(gj["dim"] == 1105);
  REQUIRE(gj["parts"]["order7"]["dim"] == 468);
}

TEST_CASE("fast flag changes nothing observable") {
  if (cli_path().empty()) SKIP("HURWITZ_CLI not set");
  for (const char* fmt : {"table", "json"}) {
    RunResult plain = run(std::string("--format ") + fmt + " ld 13 1 1 2 6");
    RunResult fast = run(std::string("--format ") + fmt + " ld 13 1 1 2 6 --fast");
    REQUIRE(plain.code == 0);
    REQUIRE(fast.code == 0);
    REQUIRE(plain.out == fast.out);
    // outside the fast domain the flag silently falls back
    RunResult off = run(std::string("--format ") + fmt + " ld 13 0 0 0 1 --fast");
    RunResult ref = run(std::string("--format ") + fmt + " ld 13 0 0 0 1");
    REQUIRE(off.code == 0);
    REQUIRE(off.out == ref.out);
  }
}

TEST_CASE("cli output is reproducible across runs") {
  if (cli_path().empty()) SKIP("HURWITZ_CLI not set");
  RunResult a = run("--format json chartable 13");
  RunResult b = run("--format json chartable 13");
  REQUIRE(a.code == 0);
  REQUIRE(a.out == b.out);
}

TEST_CASE("cli verify") {
  if (cli_path().empty()) SKIP("HURWITZ_CLI not set");
  RunResult r = run("verify 13");
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("verify PASS") != std::string::npos);
  REQUIRE(r.out.find("[skip] enumeration") != std::string::npos);
  RunResult j = run("--format json verify 13");
  json vj = json::parse(j.out);
  REQUIRE(vj["pass"] == true);
  bool skipped_enum = false;
  for (const auto& s : vj["suites"])
    if (s["name"] == "enumeration" && s["skipped"] == true) skipped_enum = true;
  REQUIRE(skipped_enum);
}

TEST_CASE("enumeration cap respects the environment") {
  if (cli_path().empty()) SKIP("HURWITZ_CLI not set");
  RunResult r = run("verify 13 --deep", "HURWITZ_ENUM_CAP=100");
  REQUIRE(r.code == 5);
  RunResult ok = run("verify 13 --deep", "HURWITZ_ENUM_CAP=2000");
  REQUIRE(ok.code == 0);
  RunResult bad = run("verify 13 --deep", "HURWITZ_ENUM_CAP=banana");
  REQUIRE(bad.code == 64);
}
