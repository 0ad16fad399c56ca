#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(WTI_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

const std::string kP4 = "x1 x2 1\nx2 x3 1\nx3 x4 2\n";
const std::string kP5 = "x1 x2 3\nx2 x3 2\nx3 x4 2\nx4 x5 3\n";

} // namespace

TEST_CASE("validate and roots") {
  auto p4 = write_temp("cli_p4.txt", kP4);
  RunResult v = run_cli("validate " + p4.string());
  CHECK(v.exit_code == 0);
  auto doc = nlohmann::json::parse(v.out);
  CHECK(doc["tree"] == true);
  CHECK(doc["increasing"] == true);
  CHECK(doc["roots"] == nlohmann::json({"x3", "x4"}));

  RunResult r = run_cli("roots " + p4.string());
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json({"x3", "x4"}));

  auto p5 = write_temp("cli_p5.txt", kP5);
  RunResult v5 = run_cli("validate " + p5.string());
  CHECK(v5.exit_code == 0);
  CHECK(nlohmann::json::parse(v5.out)["increasing"] == false);
  RunResult r5 = run_cli("roots " + p5.string());
  CHECK(r5.exit_code == 0);
  CHECK(nlohmann::json::parse(r5.out).empty());
}

TEST_CASE("exit codes: parse failure 1, precondition 2") {
  auto bad = write_temp("cli_bad.json", "{\"vertices\": [\"x1\"], ");
  CHECK(run_cli("validate " + bad.string()).exit_code == 1);

  auto forest = write_temp("cli_forest.txt", "a b 1\nc d 1\n");
  CHECK(run_cli("roots " + forest.string()).exit_code == 2);
  CHECK(run_cli("validate " + forest.string()).exit_code == 2);

  auto p5 = write_temp("cli_p5.txt", kP5);
  CHECK(run_cli("ass " + p5.string() + " --t 1").exit_code == 2);
  CHECK(run_cli("astab " + p5.string()).exit_code == 2);
  CHECK(run_cli("covers " + p5.string() + " --strong").exit_code == 2);

  auto p4 = write_temp("cli_p4.txt", kP4);
  CHECK(run_cli("ass " + p4.string()).exit_code == 1);          // --t missing
  CHECK(run_cli("ass " + p4.string() + " --t 0").exit_code == 1);
  CHECK(run_cli("nonsense").exit_code == 1);
  CHECK(run_cli("ass " + p5.string() + " --t 5 --oracle --budget 9").exit_code == 1);
}

TEST_CASE("covers, ass, astab outputs") {
  auto p4 = write_temp("cli_p4.txt", kP4);
  auto covers = nlohmann::json::parse(run_cli("covers " + p4.string() + " --minimal").out);
  CHECK(covers == nlohmann::json::parse(R"([["x1","x3"],["x2","x3"],["x2","x4"]])"));

  auto ass = nlohmann::json::parse(run_cli("ass " + p4.string() + " --t 2").out);
  CHECK(ass["t"] == 2);
  CHECK(ass["primes"].size() == 4);

  auto strong = nlohmann::json::parse(run_cli("covers " + p4.string() + " --strong").out);
  CHECK(strong.size() == 4);

  auto stab = nlohmann::json::parse(run_cli("astab " + p4.string()).out);
  CHECK(stab["astab"] == 2);
  CHECK(stab["per_cover"].size() == 4);
}

TEST_CASE("oracle route works on a non-increasing tree") {
  auto p5 = write_temp("cli_p5.txt", kP5);
  auto doc = nlohmann::json::parse(run_cli("oracle-ass " + p5.string() + " --t 5").out);
  nlohmann::json full = {"x1", "x2", "x3", "x4", "x5"};
  bool found = false;
  for (const auto& p : doc["primes"]) found = found || p == full;
  CHECK(found);
}

TEST_CASE("verify agrees on the fixtures") {
  auto p4 = write_temp("cli_p4.txt", kP4);
  RunResult r = run_cli("verify " + p4.string() + " --tmax 3");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out)["agreement"] == true);

  auto e2 = write_temp("cli_e2.txt", "x1 x2 2\n");
  CHECK(run_cli("verify " + e2.string() + " --tmax 4").exit_code == 0);
}

TEST_CASE("random generation is reproducible and honors --increasing") {
  RunResult a = run_cli("random --n 5 --wmax 3 --seed 7");
  RunResult b = run_cli("random --n 5 --wmax 3 --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult c = run_cli("random --n 7 --wmax 3 --seed 99 --increasing");
  auto tree = write_temp("cli_rand.json", c.out);
  auto doc = nlohmann::json::parse(run_cli("validate " + tree.string()).out);
  CHECK(doc["increasing"] == true);

  CHECK(run_cli("random --n 1 --wmax 3 --seed 7").exit_code == 1);
  CHECK(run_cli("random --n 5 --wmax 3").exit_code == 1); // seed mandatory
}

TEST_CASE("table format emits plain lines") {
  auto p4 = write_temp("cli_p4.txt", kP4);
  RunResult r = run_cli("astab " + p4.string() + " --format table");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("astab 2") != std::string::npos);
}
