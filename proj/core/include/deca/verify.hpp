#pragma once

#include <string>
#include <vector>

#include "deca/json_io.hpp"

namespace deca {

// Batch certification of the library's structural claims over the fixed
// catalog. Each suite covers one claim; each check covers one catalog case.
// Runs are deterministic: everything except the runtimes is a pure function
// of the catalog.

enum class CheckStatus { pass, fail, inconclusive };
std::string show(CheckStatus s);

struct CheckResult {
  std::string name;
  std::string claim;   // what this particular case certifies
  std::string anchor;  // the suite-level statement the check belongs to
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> values;  // computed quantities, "key = value" lines
  int trusted = -1;                 // trusted degree where one applies
  double ms = 0.0;

  void put(const std::string& key, const std::string& value);
  void put(const std::string& key, long long value);
  // record a failed expectation; the check keeps running to gather values
  void require(bool cond, const std::string& what);
};

struct SuiteReport {
  std::string suite;
  std::string anchor;
  std::vector<CheckResult> checks;  // sorted by name
  bool all_pass() const;           // every check PASS
  bool any_fail() const;           // at least one FAIL (INCONCLUSIVE is not a FAIL)
};

struct RunOptions {
  // Cap on homology-certificate degrees; -1 means the full trusted range.
  int max_degree = -1;
  // When nonempty, only checks whose name contains this substring run.
  std::string scope;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& suite, const RunOptions& opts = {});

Json report_to_json(const std::vector<SuiteReport>& reports);
std::string report_to_text(const std::vector<SuiteReport>& reports);

}  // namespace deca
