#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

TEST_CASE("counts prints the headline numbers", "[cli]") {
  const auto r = clirun::run("counts --n 3");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "# COMPLETE CELLS = 12\n"
        "# PROPER CELLS = 10\n"
        "# EMPTY CELLS = 27\n"
        "# POSSIBLE CELLS = 49\n");

  const auto j = json::parse(clirun::run("counts --n 4 --format json").out);
  CHECK(j == json::parse(R"({"n":4,"complete":50,"proper":67,"empty":108,"total":225})"));

  const auto csv = clirun::run("counts --n 3 --format csv");
  CHECK(csv.out == "n,complete,proper,empty,total\n3,12,10,27,49\n");
}

TEST_CASE("table renders the zone grid with its summary", "[cli]") {
  const auto r = clirun::run("table --n 3");
  CHECK(r.code == 0);
  const auto rows = lines_of(r.out);
  REQUIRE(rows.size() == 10);
  CHECK(rows[1] == "i=1  C = 6, E = 3  C = 3, E = 6  E = 3");
  CHECK(rows[5] == "# COMPLETE CELLS = 12");
  CHECK(rows[7] == "# NON-EMPTY CELLS = 22");

  const auto csv = lines_of(clirun::run("table --n 3 --format csv").out);
  REQUIRE(csv.size() == 10);
  CHECK(csv[0] == "i,j,zone,complete,proper,empty");
  CHECK(csv[3] == "1,3,3,,,3");

  const auto j = json::parse(clirun::run("table --n 4 --format json").out);
  CHECK(j["summary"]["possible"] == 225);
  CHECK(j["grid"].size() == 4);
}

TEST_CASE("classify works from supports and from a flag", "[cli]") {
  const auto empty = clirun::run("classify --n 3 --k1 1,2 --k2 2,3");
  CHECK(empty.code == 0);
  const auto je = json::parse(empty.out);
  CHECK(je["class"] == "Empty");
  CHECK_FALSE(je.contains("dim"));
  CHECK(je["stab_dim"] == 1);
  CHECK(je["torus_dim"] == 2);

  const auto proper = json::parse(clirun::run("classify --n 4 --k1 1,3 --k2 1,3,4").out);
  CHECK(proper["class"] == "Proper");
  CHECK(proper["dim"] == 2);

  const auto complete = json::parse(clirun::run("classify --n 3 --k1 1 --k2 2,3").out);
  CHECK(complete["class"] == "Complete");
  CHECK(complete["dim"] == 1);

  // flag input through stdin
  const auto witness = clirun::run("witness --n 4 --k1 1,3 --k2 1,3,4");
  REQUIRE(witness.code == 0);
  const auto round = clirun::run("classify -", witness.out);
  CHECK(round.code == 0);
  const auto jr = json::parse(round.out);
  CHECK(jr["class"] == "Proper");
  CHECK(jr["k1"] == json::parse("[1,3]"));
  CHECK(jr["k2"] == json::parse("[1,3,4]"));
}

TEST_CASE("witness emits a flag or refuses an empty cell", "[cli]") {
  const auto r = clirun::run("witness --n 3 --k1 1,2 --k2 1,2");
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["stages"][0] == json::parse(R"([["1","-1","0"]])"));
  CHECK(j["stages"][1] == json::parse(R"([["1","-1","0"],["0","0","1"]])"));

  const auto refused = clirun::run("witness --n 3 --k1 1,2 --k2 2,3");
  CHECK(refused.code == 1);
  CHECK(refused.out.empty());
}

TEST_CASE("verify passes, reports, and stays deterministic", "[cli][slow]") {
  const std::string args = "verify --max-n 4 --samples 60 --seed 7";
  const auto first = clirun::run(args);
  CHECK(first.code == 0);
  const auto rows = lines_of(first.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows.front().rfind("[ ok ] global-counts", 0) == 0);
  CHECK(rows.back() == "verify: PASS (10 suites)");
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) CHECK(rows[k].rfind("[ ok ]", 0) == 0);

  const auto second = clirun::run(args);
  CHECK(second.out == first.out);
}

TEST_CASE("an injected count fault is caught and named", "[cli]") {
  const auto r = clirun::run("verify --max-n 3 --samples 5 --inject-count-fault");
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] restricted-counts") != std::string::npos);
  CHECK(r.out.find("n=3 i=1 j=1") != std::string::npos);
  CHECK(lines_of(r.out).back() == "verify: FAIL");
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  CHECK(clirun::run("verify --max-n 2").code == 2);
  CHECK(clirun::run("verify --max-n 11").code == 2);
  CHECK(clirun::run("counts").code == 2);
  CHECK(clirun::run("nonsense").code == 2);
  CHECK(clirun::run("").code == 2);
  CHECK(clirun::run("enumerate --n 3").code == 2);
  CHECK(clirun::run("enumerate --n 3 --d 1 --orbits").code == 2);
  CHECK(clirun::run("enumerate --n 3 --d 1 --dims 1,2").code == 2);
  CHECK(clirun::run("classify --n 3 --k1 1,2").code == 2);
  CHECK(clirun::run("--help").code == 0);
}

TEST_CASE("enumerate streams one family per line", "[cli]") {
  const auto singles = lines_of(clirun::run("enumerate --n 3 --d 1").out);
  CHECK(singles.size() == 7);

  const auto cells = lines_of(clirun::run("enumerate --n 3 --dims 1,2").out);
  REQUIRE(cells.size() == 49);
  for (const std::string& line : cells) {
    const auto j = json::parse(line);
    CHECK(j["n"] == 3);
    CHECK(j["components"].size() == 2);
  }

  const auto orbits = lines_of(clirun::run("enumerate --n 3 --dims 1,2 --orbits").out);
  REQUIRE(orbits.size() == 13);
  long long total = 0;
  for (const std::string& line : orbits) total += json::parse(line)["orbit_size"].get<long long>();
  CHECK(total == 49);
}

TEST_CASE("plucker and stabilizer read JSON from stdin", "[cli]") {
  const auto p = clirun::run("plucker -", R"([["1","0","1","2"],["0","1","3","4"]])");
  REQUIRE(p.code == 0);
  const auto jp = json::parse(p.out);
  CHECK(jp["n"] == 4);
  CHECK(jp["d"] == 2);
  CHECK(jp["matroid"]["bases"].size() == 6);
  CHECK(jp["coordinates"][3] == json::parse(R"({"subset":[2,3],"value":"-1"})"));

  const auto s = clirun::run(
      "stabilizer -",
      R"({"n":4,"components":[
            {"n":4,"d":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]},
            {"n":4,"d":3,"bases":[[1,2,3],[1,2,4],[1,3,4],[2,3,4]]}]})");
  REQUIRE(s.code == 0);
  const auto js = json::parse(s.out);
  CHECK(js["stab_dim"] == 1);
  CHECK(js["torus_dim"] == 3);

  // a dependent matrix is a data error, not a crash
  CHECK(clirun::run("plucker -", R"([["1","2"],["2","4"]])").code == 2);
  CHECK(clirun::run("plucker -", "not json").code == 2);
}

TEST_CASE("output lands in a file when asked", "[cli]") {
  const std::string path = clirun::scratch_path("payload.txt");
  const auto r = clirun::run("counts --n 3 --output " + path);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(content.rfind("# COMPLETE CELLS = 12", 0) == 0);
}
