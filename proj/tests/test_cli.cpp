#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(BERNKIT_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    CHECK(run("verify MAIN --n-max 10 --no-meta").code == 0);
    CHECK(run("verify MAIN --n-max 10 --inject-fault MAIN").code == 1);
    CHECK(run("verify NOPE").code == 2);
    CHECK(run("verify MAIN --j-min 5 --j-max 2").code == 2);
    CHECK(run("verify MAIN --format yaml").code == 2);
    CHECK(run("congruence C1 --p-max 2").code == 2);
    CHECK(run("compute hw --n-max 3").code == 2);
    CHECK(run("compute hw --n-max 3 --x 1/0").code == 2);
    CHECK(run("series nope").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("compute bernoulli as json") {
    const RunResult r = run("compute bernoulli --n-max 4 --no-meta");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK_FALSE(j.contains("meta"));
    const auto vals = j.dump();
    CHECK(vals.find("\"-1/2\"") != std::string::npos);
    CHECK(vals.find("\"-1/30\"") != std::string::npos);
  }

  TEST_CASE("meta block is present by default") {
    const RunResult r = run("compute harmonic --n-max 3");
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("meta"));
  }

  TEST_CASE("output is byte-deterministic without meta") {
    for (const char* args : {"verify all --n-max 12 --m-max 6 --no-meta", "congruence all --p-max 23 --no-meta",
                             "series polybern --p 2 --order 10 --no-meta --format csv",
                             "compute stirling2 --n-max 8 --no-meta --format markdown"}) {
      CAPTURE(args);
      const RunResult a = run(args), b = run(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }

  TEST_CASE("verify report shape") {
    const RunResult r = run("verify MAIN GEN_WORPITZKY --n-max 10 --no-meta");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"suite", "cases", "failures", "notes"}) CHECK(j.contains(key));
    CHECK(j["failures"].empty());
    CHECK(j["cases"].get<long>() > 0);
  }

  TEST_CASE("fault injection yields failure records") {
    const RunResult r = run("verify REC16 --n-max 10 --inject-fault REC16 --no-meta");
    CHECK(r.code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["failures"].size() == 10);
  }

  TEST_CASE("j = n opt-in is reported") {
    const RunResult r = run("verify MAIN --n-max 5 --include-j-equals-n --no-meta");
    CHECK(r.code == 1);
    CHECK(r.out.find("indeterminate") != std::string::npos);
  }

  TEST_CASE("series output") {
    const RunResult r = run("series stirling2-egf --k 2 --order 5 --no-meta");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"15/1\"") != std::string::npos);
    CHECK(run("series stirling2-egf --order 5").code == 2);
  }

  TEST_CASE("out file") {
    const std::string path = "bernkit_cli_test_out.json";
    std::remove(path.c_str());
    REQUIRE(run("compute euler --n-max 5 --no-meta --out " + path).code == 0);
    FILE* f = std::fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    std::fclose(f);
    std::remove(path.c_str());
  }
}
