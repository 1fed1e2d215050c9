#ifndef SHORTTORIC_VERIFY_HPP
#define SHORTTORIC_VERIFY_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace shorttoric {

/*
  Cross-formula verification suites. Every check compares exact rational
  quantities computed by independent routes; a residual string is attached
  on failure. Suites: four-routes, structural, reflection, bases,
  dual-simplicial, table1, gessel, appendix.
*/
struct CheckResult {
  std::string id;      // stable anchor, e.g. "four-routes/cube-3"
  bool pass = false;
  std::string detail;  // residual or short description on failure
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  // informational, not pass/fail

  bool all_pass() const;
};

// Suite names accepted by run_suite, excluding "all".
std::vector<std::string> suite_names();

// max_n <= 0 keeps each suite's default caps; a positive value lowers them.
SuiteReport run_suite(const std::string& name, int max_n = 0);

nlohmann::json suite_report_to_json(const SuiteReport& report);

// Runs every suite and packages the reports plus implementation notes.
nlohmann::json full_report(int max_n = 0);

}  // namespace shorttoric

#endif
