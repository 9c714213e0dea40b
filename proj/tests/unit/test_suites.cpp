#include <atomic>

#include "conecli/suites.hpp"
#include "doctest.h"

using namespace conetensor;

TEST_SUITE("suites") {
  TEST_CASE("task results keep submission order") {
    std::vector<suites::Task> tasks;
    for (int i = 0; i < 20; ++i) {
      tasks.push_back([i] {
        if (i == 7) throw std::runtime_error("boom");
        return std::vector<suites::Check>{{"t" + std::to_string(i), true, "", Json::object()}};
      });
    }
    const auto checks = suites::run_tasks(tasks, "demo");
    REQUIRE(checks.size() == 20);
    CHECK(checks[0].id == "t0");
    CHECK(checks[7].id == "demo/task7");
    CHECK_FALSE(checks[7].passed);
    CHECK(checks[19].id == "t19");
  }

  TEST_CASE("suite names and aliases") {
    CHECK(suites::suite_names().size() == 10);
    CHECK(suites::run("thmF").front().suite == "thmF_rays");
    CHECK_THROWS_AS(suites::run("thmZ"), std::invalid_argument);
  }

  TEST_CASE("small suites pass and report deterministically") {
    const auto a = suites::run("thmC");
    const auto b = suites::run("thmC");
    CHECK(a.front().all_passed());
    CHECK(suites::report_json(a).dump() == suites::report_json(b).dump());
    CHECK(suites::report_text(a).find("ALL PASSED") != std::string::npos);
  }

  TEST_CASE("thmA reports the half-plane and zero-cone corner") {
    const auto r = suites::run("thmA").front();
    bool seen = false;
    for (const auto& c : r.checks) {
      if (c.id == "min_proper/halfplanexzero2") {
        seen = true;
        CHECK(c.passed);
        CHECK(c.data["proper"] == true);
      }
    }
    CHECK(seen);
  }
}
