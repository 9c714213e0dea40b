#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run conecli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" CONECLI_PATH "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string(CLI_TMP_DIR) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("tensor of two orthant documents") {
  const std::string p = write_temp("std2.json", R"({"dim":2,"rays":[[1,0],[0,1]]})");
  const Run r = conecli("tensor --kind min " + p + " " + p);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dim"] == 4);
  CHECK(j["rays"].size() == 4);
  CHECK(j["inequalities"].size() == 4);
}

TEST_CASE("builtin references and text output") {
  const Run r = conecli("dual builtin:Q --format text");
  CHECK(r.code == 0);
  CHECK(r.out.find("(1,0,1)") != std::string::npos);
  const Run c = conecli("check builtin:halfplane");
  CHECK(nlohmann::json::parse(c.out)["proper"] == false);
  const Run l = conecli("lineality builtin:halfplane");
  CHECK(nlohmann::json::parse(l.out)["basis"] == nlohmann::json::parse("[[1,0]]"));
  const Run rays = conecli("rays builtin:pent5");
  CHECK(nlohmann::json::parse(rays.out)["count"] == 5);
}

TEST_CASE("face operations") {
  const Run ok = conecli("face-ops builtin:Q builtin:Qstar --m 0 --n 0,1");
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["all_faces"] == true);
  CHECK(j["results"].size() == 4);
  CHECK(conecli("face-ops builtin:Q builtin:Qstar --m 0,3 --n 0").code == 2);
}

TEST_CASE("rank-one membership") {
  const Run r = conecli("rank1 builtin:Q builtin:Qstar 1,1,1 1,0,1 --kind max");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["member"] == true);
  CHECK(j["clause"] == "positive_pair");
  const Run frac = conecli(R"(rank1 builtin:std2 builtin:std1 '[1,"1/2"]' 2)");
  CHECK(nlohmann::json::parse(frac.out)["tensor"] == nlohmann::json::parse(R"([2, 1])"));
}

TEST_CASE("hull reports") {
  const Run sym = conecli("hull builtin:interval builtin:square");
  CHECK(sym.code == 0);
  CHECK(nlohmann::json::parse(sym.out)["hull_slice"] == true);
  const Run ns = conecli("hull builtin:interval builtin:seg23");
  CHECK(ns.code == 0);
  CHECK(nlohmann::json::parse(ns.out)["non_extreme_vertex_tensors"] == nlohmann::json::parse("[[-2],[2]]"));
}

TEST_CASE("verify suites") {
  const Run f = conecli("verify --suite thmF");
  CHECK(f.code == 0);
  CHECK(f.out.find("PASS projective_ray_count/QxQstar: 16 = 4 x 4") != std::string::npos);
  const Run a = conecli("verify --suite thmA --format json");
  CHECK(a.code == 0);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["all_passed"] == true);
  bool corner = false;
  for (const auto& c : j["suites"][0]["checks"])
    if (c["id"] == "min_proper/halfplanexzero2") corner = c["data"]["proper"] == true;
  CHECK(corner);
}

TEST_CASE("exit codes") {
  CHECK(conecli("--help").code == 0);
  CHECK(conecli("").code == 2);
  CHECK(conecli("tensor builtin:Q builtin:Q").code == 2);
  CHECK(conecli("tensor --kind mid builtin:Q builtin:Q").code == 2);
  CHECK(conecli("dual builtin:nope").code == 2);
  CHECK(conecli("dual /nonexistent/file.json").code == 2);
  const std::string bad = write_temp("bad.json", R"({"dim":2,"rays":[[1,"1/0"]]})");
  CHECK(conecli("dual " + bad).code == 2);
  const std::string extra = write_temp("extra.json", R"({"dim":1,"rays":[[1]],"note":"x"})");
  CHECK(conecli("dual " + extra).code == 2);
  CHECK(conecli("dual --lenient " + extra).code == 0);
  CHECK(conecli("verify --suite nope").code == 2);
  CHECK(conecli("tensor --kind max builtin:Q builtin:Qstar", "CONETENSOR_MAX_DD_ROWS=3").code == 3);
}

TEST_CASE("stdin input") {
  const Run r = conecli("check - < " + write_temp("q.json", R"({"dim":2,"inequalities":[[0,1]]})"));
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["generating"] == true);
}
