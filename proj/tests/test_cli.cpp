#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tmp_path(const char* tag) {
  static int counter = 0;
  return "/tmp/rotsys_cli_test_" + std::to_string(getpid()) + "_" + tag + "_" +
         std::to_string(counter++);
}

// Runs the CLI with a shell-quoted argument string; stdin comes from `input` when nonempty.
RunResult run(const std::string& args, const std::string& input = "") {
  std::string out = tmp_path("out"), err = tmp_path("err");
  std::string cmd = std::string(ROTSYS_CLI_PATH) + " " + args;
  if (!input.empty()) {
    std::string in = tmp_path("in");
    std::ofstream(in, std::ios::binary) << input;
    cmd += " < " + in;
  }
  cmd += " > " + out + " 2> " + err;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("gen | validate round trip") {
  RunResult gen = run("gen pi_n --n 3");
  REQUIRE(gen.exit_code == 0);
  json j = json::parse(gen.out);
  CHECK(j.contains("elements"));
  CHECK(j.contains("pi"));

  RunResult val = run("validate -", gen.out);
  CHECK(val.exit_code == 0);
  CHECK(val.out.find("system ok") != std::string::npos);
}

TEST_CASE("gen complete matches the named builtin") {
  RunResult fig = run("gen fig1");
  RunResult complete = run("gen complete --n 4 --index 4");
  REQUIRE(fig.exit_code == 0);
  REQUIRE(complete.exit_code == 0);
  CHECK(fig.out == complete.out);
}

TEST_CASE("gen witness drawings classify back") {
  RunResult w1 = run(
      "gen witness1 --n 4 --witness-sign negative --direction forward "
      "--blue-order increasing --red-order increasing");
  REQUIRE(w1.exit_code == 0);
  RunResult cls = run("classify -", w1.out);
  REQUIRE(cls.exit_code == 0);
  json j = json::parse(cls.out);
  CHECK(j["ell"] == 1);
  CHECK(j["one_drawing"]["sign"] == "negative");
  CHECK(j["one_drawing"]["direction"] == "forward");

  RunResult w2 = run("gen witness2 --n 4 --ahead-sign negative");
  REQUIRE(w2.exit_code == 0);
  json c2 = json::parse(run("classify -", w2.out).out);
  CHECK(c2["ell"] == 2);
  CHECK(c2["two_drawing"]["ahead_sign"] == "negative");
  CHECK(c2["two_drawing"]["behind_sign"] == "positive");
}

TEST_CASE("export is byte-stable and emits dot on request") {
  RunResult sys = run("gen k2n --n 3");
  RunResult once = run("export -", sys.out);   // system -> planarized embedding map
  REQUIRE(once.exit_code == 0);
  RunResult twice = run("export -", once.out); // map -> the same map
  REQUIRE(twice.exit_code == 0);
  CHECK(once.out == twice.out);

  RunResult dot = run("export --dot -", sys.out);
  REQUIRE(dot.exit_code == 0);
  CHECK(dot.out.rfind("graph map {", 0) == 0);
  CHECK(dot.out.find(" -- ") != std::string::npos);
}

TEST_CASE("validate reports violations with exit 1") {
  RunResult w1 = run(
      "gen witness1 --n 3 --witness-sign positive --direction forward "
      "--blue-order increasing --red-order increasing");
  json j = json::parse(w1.out);
  j["crossings"][1]["id"] = j["crossings"][0]["id"];
  RunResult bad = run("validate -", j.dump());
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.find("duplicate crossing id") != std::string::npos);
}

TEST_CASE("malformed and mistyped inputs exit 2") {
  CHECK(run("validate -", "{nope").exit_code == 2);
  CHECK(run("validate -", "{\"vertices\":[1]}").exit_code == 2);
  CHECK(run("crg --system builtin:nope").exit_code == 2);
  CHECK(run("gen pi_n --n 0").exit_code == 2);
}

TEST_CASE("crg emits a verifiable witness and certificate flags") {
  std::string wit = tmp_path("witness");
  RunResult r = run("crg --system builtin:fig1 --emit-witness " + wit);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["genus"] == 1);
  CHECK(j["exceeds_budget"] == false);
  CHECK(j["upper_bound_only"] == false);
  CHECK(j["truncated"] == false);
  CHECK(j["witness_crossings"] == 0);
  CHECK(run("validate " + wit).exit_code == 0);

  RunResult b0 = run("crg --system builtin:fig1 --genus-budget 0");
  REQUIRE(b0.exit_code == 0);
  json jb = json::parse(b0.out);
  CHECK(jb["exceeds_budget"] == true);
  CHECK(jb["genus"].is_null());
}

TEST_CASE("crg truncation exits 3") {
  RunResult r = run("crg --system builtin:fig1 --max-nodes 5");
  CHECK(r.exit_code == 3);
  CHECK(json::parse(r.out)["truncated"] == true);
  CHECK(run("crg --system builtin:pi_n:4").exit_code == 3);  // uncapped refusal
}

TEST_CASE("crg with the cycle filter finds the double torus witness") {
  RunResult r = run(
      "crg --system builtin:pi_n:3 --predicate ell=1 --genus-budget 2 --jobs 2");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["genus"] == 1);
  CHECK(j["witness_crossings"] == 5);
}

TEST_CASE("claims subcommand exit codes") {
  RunResult ok = run("claims --claim 7.3");
  CHECK(ok.exit_code == 0);
  json rows = json::parse(ok.out);
  REQUIRE(rows.is_array());
  CHECK(rows.size() == 3);
  for (const json& row : rows) CHECK(row["pass"] == true);

  RunResult table = run("claims --claim 7.3 --format table");
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("pass") != std::string::npos);

  CHECK(run("claims --claim 7.3 --n 5").exit_code == 2);  // n outside the claim's range
  CHECK(run("claims --claim 9.9").exit_code == 2);
}

TEST_CASE("claims catalog runs clean end to end") {
  RunResult all = run("claims --claim all --jobs 2");
  REQUIRE(all.exit_code == 0);
  json rows = json::parse(all.out);
  CHECK(rows.size() == 59);
  for (const json& row : rows) CHECK(row["pass"] == true);
}

TEST_CASE("extract logs stages to stderr and prints the drawing") {
  RunResult w1 = run(
      "gen witness1 --n 4 --witness-sign positive --direction forward "
      "--blue-order increasing --red-order increasing");
  RunResult ex = run("extract --pipeline 1 -", w1.out);
  REQUIRE(ex.exit_code == 0);
  CHECK(ex.err.find("sign pairs") != std::string::npos);
  CHECK(ex.err.find("profile:") != std::string::npos);
  CHECK(run("validate -", ex.out).exit_code == 0);
}

TEST_CASE("gen star emits dot with the expected size") {
  RunResult r = run("gen star --n 4 --spine blue --order inc --sign pos --format dot");
  REQUIRE(r.exit_code == 0);
  int edges = 0;
  for (size_t p = r.out.find(" -- "); p != std::string::npos; p = r.out.find(" -- ", p + 4))
    ++edges;
  CHECK(edges == 10);
}
