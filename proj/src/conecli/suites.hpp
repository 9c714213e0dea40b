#pragma once

#include <functional>
#include <string>
#include <vector>

#include "conecli/document.hpp"

namespace conetensor::suites {

struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
  Json data = Json::object();  // carries "witness" when a check fails
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Accepts a suite name, an alias (thmF for thmF_rays), or "all".
/// Throws std::invalid_argument for unknown names.
std::vector<SuiteReport> run(const std::string& name);

using Task = std::function<std::vector<Check>()>;
/// Runs tasks on a worker pool; results keep task order, and an exception becomes a failed check.
std::vector<Check> run_tasks(const std::vector<Task>& tasks, const std::string& error_prefix);

Json report_json(const std::vector<SuiteReport>& reports);
std::string report_text(const std::vector<SuiteReport>& reports);

}  // namespace conetensor::suites
