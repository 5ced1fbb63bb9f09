#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int run(const std::string& args) {
  std::string cmd = std::string(CDG_TOOL_PATH) + " " + args;
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  return json::parse(f);
}

void write_json(const std::string& path, const json& j) {
  std::ofstream f(path);
  REQUIRE(f.good());
  f << j.dump(2) << "\n";
}

}  // namespace

TEST_CASE("help and parse errors") {
  CHECK(run("--help > cli_help.txt") == 0);
  CHECK(run("build --help > cli_help.txt") == 0);
  CHECK(run("") == 2);                      // a subcommand is required
  CHECK(run("frobnicate") == 2);            // unknown subcommand
  CHECK(run("build 2> cli_err.txt") == 2);  // --out is required
  CHECK(run("verify --in no_such_file.json 2> cli_err.txt") == 2);
}

TEST_CASE("fixture reports and degree payloads") {
  CHECK(run("build --base cyclic --m 12 --out cli_c12.json > cli_log.txt") == 0);
  json rep = read_json("cli_c12.json");
  CHECK(rep.at("schema") == 1);
  REQUIRE(rep.at("levels").size() == 1);
  CHECK(rep.at("levels")[0].at("group").at("kind") == "cyclic");

  CHECK(run("degrees --in cli_c12.json > cli_c12_deg.json") == 0);
  json deg = read_json("cli_c12_deg.json");
  CHECK(deg.at("order") == 12);
  CHECK(deg.at("support") == json::array({1}));
  CHECK(deg.at("cdg") == true);
  REQUIRE(deg.at("degrees").size() == 1);
  CHECK(deg.at("degrees")[0].at("multiplicity") == 12);

  CHECK(run("build --base extraspecial --p 3 --n 1 --out cli_es.json "
            "> cli_log.txt") == 0);
  CHECK(run("degrees --in cli_es.json > cli_es_deg.json") == 0);
  json es = read_json("cli_es_deg.json");
  CHECK(es.at("order") == 27);
  CHECK(es.at("support") == json::array({1, 3}));
  CHECK(es.at("cdg") == false);

  CHECK(run("degrees --in cli_c12.json --level 5 2> cli_err.txt") == 2);
}

TEST_CASE("verification tiers on an enumerable base") {
  REQUIRE(run("build --base seven-cube --out cli_seven.json > cli_log.txt") == 0);
  CHECK(run("verify --in cli_seven.json --tier certificate > cli_log.txt") == 0);
  CHECK(run("verify --in cli_seven.json --tier brute > cli_log.txt") == 0);
  CHECK(run("verify --in cli_seven.json --tier cross > cli_log.txt") == 0);
  CHECK(run("verify --in cli_seven.json --tier nope 2> cli_err.txt") == 2);

  CHECK(run("degrees --in cli_seven.json > cli_seven_deg.json") == 0);
  json deg = read_json("cli_seven_deg.json");
  CHECK(deg.at("order") == 2058);
  CHECK(deg.at("support") == json::array({1, 6, 21}));
  CHECK(deg.at("cdg") == true);

  // Tampered certificates fail verification with exit code 1.
  json rep = read_json("cli_seven.json");
  rep["levels"][0]["certificate"]["fitting_height"] = 9;
  write_json("cli_seven_bad.json", rep);
  CHECK(run("verify --in cli_seven_bad.json --tier certificate 2> cli_err.txt") == 1);
  CHECK(run("verify --in cli_seven_bad.json --tier brute 2> cli_err.txt") == 1);

  // Caps that the group does not fit under exit with code 3.
  CHECK(run("degrees --in cli_seven.json --cap 100 2> cli_err.txt") == 3);
  CHECK(run("verify --in cli_seven.json --tier brute --cap 100 2> cli_err.txt") == 3);

  // Malformed report files are rejected with exit code 2.
  std::ofstream bad("cli_garbage.json");
  bad << "not json at all\n";
  bad.close();
  CHECK(run("verify --in cli_garbage.json 2> cli_err.txt") == 2);
}

TEST_CASE("symbolic towers through the tool") {
  REQUIRE(run("build --base three-prime --p1 7 --p2 13 --r 3 --steps 2 "
              "--strategy three-primes --mode symbolic --out cli_tp.json "
              "> cli_log.txt") == 0);
  json rep = read_json("cli_tp.json");
  REQUIRE(rep.at("levels").size() == 3);
  CHECK(rep.at("levels")[2].at("group").at("kind") == "step");
  CHECK_FALSE(rep.at("levels")[2].at("group").contains("module"));

  CHECK(run("verify --in cli_tp.json --tier certificate > cli_log.txt") == 0);
  // Cross skips the over-cap base and the symbolic steps but still passes.
  CHECK(run("verify --in cli_tp.json --tier cross --cap 100000 > cli_cross.txt") == 0);
  // Brute insists on enumerating, and the base alone is over the default cap.
  CHECK(run("verify --in cli_tp.json --tier brute 2> cli_err.txt") == 3);

  // Brute on a symbolic step is an invalid request even when the base fits.
  REQUIRE(run("build --base cyclic --m 3 --steps 1 --mode symbolic "
              "--out cli_sym.json > cli_log.txt") == 0);
  CHECK(run("verify --in cli_sym.json --tier brute 2> cli_err.txt") == 2);
  CHECK(run("verify --in cli_sym.json --tier cross > cli_log.txt") == 0);

  // Unknown strategies and bad bases are parameter errors.
  CHECK(run("build --base nope --out cli_x.json 2> cli_err.txt") == 2);
  CHECK(run("build --base cyclic --m 3 --steps 1 --strategy nope "
            "--out cli_x.json 2> cli_err.txt") == 2);
}

TEST_CASE("explicit steps through the tool") {
  REQUIRE(run("build --base cyclic --m 3 --steps 1 --out cli_step.json "
              "> cli_log.txt") == 0);
  json rep = read_json("cli_step.json");
  REQUIRE(rep.at("levels").size() == 2);
  const json& step = rep.at("levels")[1].at("group");
  CHECK(step.at("kind") == "step");
  CHECK(step.at("p") == 11);
  CHECK(step.at("q") == 3);
  REQUIRE(step.contains("module"));  // auto picks the explicit mode here
  CHECK(step.at("module").at("module").at("dim") == 2);

  // The rebuild is deterministic, so the certificate tier accepts it.
  CHECK(run("verify --in cli_step.json --tier certificate > cli_log.txt") == 0);
  // With a low cap the step is certificate-only but verification passes.
  CHECK(run("verify --in cli_step.json --tier cross --cap 100000 "
            "> cli_cross2.txt") == 0);

  // A tampered spin seed no longer matches the recomputation.
  rep["levels"][1]["group"]["module"]["seed"] = 99999;
  write_json("cli_step_bad.json", rep);
  CHECK(run("verify --in cli_step_bad.json --tier certificate 2> cli_err.txt") == 1);

  // A report whose first level is a step cannot be rebuilt.
  json headless = read_json("cli_step.json");
  headless["levels"] = json::array({headless["levels"][1]});
  write_json("cli_headless.json", headless);
  CHECK(run("verify --in cli_headless.json --tier certificate 2> cli_err.txt") == 2);
}
