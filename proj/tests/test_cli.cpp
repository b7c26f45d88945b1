#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(DEGFAC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& content) {
  std::string path = std::string("cli_") + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("factor command emits a complete verified report") {
  std::string f = write_file("f1.txt", "(x1+1)^2*(x1+x2)");
  RunResult r = run("factor " + f + " --degree 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "factor");
  CHECK(j["mode"] == "guaranteed");
  CHECK(j["complete_product"] == true);
  REQUIRE(j["factors"].size() == 2);
  CHECK(j["factors"][0]["poly"] == "x1 + 1");
  CHECK(j["factors"][0]["multiplicity"] == 2);
  CHECK(j["factors"][1]["poly"] == "x1 + x2");
  CHECK(j["factors"][1]["multiplicity"] == 1);
}

TEST_CASE("constant input has no factors") {
  std::string f = write_file("f2.txt", "7");
  RunResult r = run("factor " + f + " --degree 3");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["factors"].empty());
  CHECK(j["complete_product"] == true);
}

TEST_CASE("formula documents are accepted") {
  std::string doc = R"({"op": "prod", "children": [
    {"node": {"op": "sum", "children": [
      {"node": {"op": "var", "index": 1}},
      {"node": {"op": "var", "index": 2}}]}},
    {"node": {"op": "sum", "children": [
      {"node": {"op": "var", "index": 1}},
      {"scalar": "-1", "node": {"op": "var", "index": 2}}]}}]})";
  std::string f = write_file("f3.json", doc);
  RunResult r = run("factor " + f + " --degree 1");
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  REQUIRE(j["factors"].size() == 2);
  CHECK(j["factors"][0]["poly"] == "x1 - x2");
  CHECK(j["factors"][1]["poly"] == "x1 + x2");
}

TEST_CASE("parse errors exit with code 2") {
  std::string f = write_file("f4.txt", "x1++");
  RunResult r = run("factor " + f + " --degree 1");
  CHECK(r.exit_code == 2);
  RunResult r2 = run("factor no_such_file.txt --degree 1");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("divides command") {
  std::string f = write_file("f5.txt", "x1^2 - x2^2");
  std::string g = write_file("g5.txt", "x1 - x2");
  RunResult r = run("divides " + f + " " + g);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["divides"] == true);
  CHECK(j["quotient"] == "x1 + x2");

  std::string h = write_file("h5.txt", "x1 + 1");
  json j2 = json::parse(run("divides " + f + " " + h).out);
  CHECK(j2["divides"] == false);
  CHECK_FALSE(j2.contains("quotient"));

  std::string z = write_file("z5.txt", "0");
  CHECK(run("divides " + f + " " + z).exit_code == 2);
}

TEST_CASE("pseudo-quotient and resultant commands") {
  std::string f = write_file("f6.txt", "(x1 + x2 + 1)*(x1 - x2 + 2)");
  std::string g = write_file("g6.txt", "x1 + x2 + 1");
  json j = json::parse(run("pseudo-quotient " + f + " " + g).out);
  CHECK(j["quotient"] == "x1 - x2 + 2");
  CHECK(j["beta"] == "1");

  std::string p = write_file("p6.txt", "x1^2 - x2^2");
  std::string q = write_file("q6.txt", "x1 - x2");
  json jr = json::parse(run("resultant " + p + " " + q + " --var 2").out);
  CHECK(jr["resultant"] == "0");
  json jr2 = json::parse(run("resultant " + p + " " + g + " --var 2").out);
  CHECK(jr2["resultant"] != "0");
}

TEST_CASE("pit command reports a witness") {
  std::string f = write_file("f7.txt", "x1*x2 - x1*x2 + x1");
  json j = json::parse(run("pit " + f).out);
  CHECK(j["zero"] == false);
  REQUIRE(j.contains("witness"));
  std::string z = write_file("z7.txt", "x1 - x1");
  json jz = json::parse(run("pit " + z).out);
  CHECK(jz["zero"] == true);
}

TEST_CASE("verify accepts genuine reports and rejects tampered ones") {
  std::string f = write_file("f8.txt", "(x1+1)^2*(x1+x2)*(x1^2+x2^2+1)");
  RunResult fr = run("factor " + f + " --degree 1");
  REQUIRE(fr.exit_code == 0);
  std::string rep = write_file("rep8.json", fr.out);
  CHECK(run("verify " + rep + " " + f).exit_code == 0);
  CHECK(run("verify " + rep + " " + f + " --deep").exit_code == 0);

  json j = json::parse(fr.out);
  j["factors"][0]["multiplicity"] = 1;
  std::string bad1 = write_file("rep8a.json", j.dump());
  CHECK(run("verify " + bad1 + " " + f).exit_code == 4);

  json j2 = json::parse(fr.out);
  j2["factors"][1]["poly"] = "x1 + 2*x2";
  std::string bad2 = write_file("rep8b.json", j2.dump());
  CHECK(run("verify " + bad2 + " " + f).exit_code == 4);
}

TEST_CASE("output is byte-stable across repeated runs") {
  std::string f = write_file("f9.txt", "(x1+x2+1)^2*(x1^2-x2)*(x1-3)");
  RunResult a = run("factor " + f + " --degree 2");
  RunResult b = run("factor " + f + " --degree 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run("factor " + f + " --degree 2 --format text");
  RunResult d = run("factor " + f + " --degree 2 --format text");
  CHECK(c.out == d.out);
  CHECK(c.out != a.out);
}

TEST_CASE("thread count does not change results") {
  std::string f = write_file("f10.txt", "(x1+x2)*(x1+x3+1)*(x2*x3+5)");
  RunResult a = run("factor " + f + " --degree 1 --threads 1");
  RunResult b = run("factor " + f + " --degree 1 --threads 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}
