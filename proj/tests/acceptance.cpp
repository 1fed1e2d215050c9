// Acceptance gate: one line per criterion. Every comparison is exact
// rational equality; a criterion fails if any identity in its suite fails
// or its wall-time budget is exceeded.

#include <chrono>
#include <cstdio>
#include <string>

#include "shorttoric/verify.hpp"

using namespace shorttoric;

namespace {

struct Criterion {
  int number;
  const char* label;
  const char* suite;
  double budget_seconds;
};

const Criterion kCriteria[] = {
    {1, "table of t(n,i) via both phi routes, n <= 5", "table1", 10.0},
    {2, "four-route short toric agreement on the generated families", "four-routes", 120.0},
    {3, "cube g: face lattice vs both closed forms", "gessel", 120.0},
    {4, "reflection principle: ce weights and cd-word path models", "reflection", 300.0},
    {5, "h-expansion: brute force vs Catalan/Q closed form", "appendix", 300.0},
    {6, "dual simplicial formulas, pairwise and against direct computation", "dual-simplicial",
     60.0},
    {7, "structural invariants (symmetry, integrality, duality, vanishing)", "structural", 60.0},
    {8, "basis suite: x<->Q, x<->t, Morgan-Voyce, operator actions", "bases", 10.0},
};

}  // namespace

int main() {
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = run_suite(c.suite);
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool pass = report.all_pass();
    bool in_budget = elapsed < c.budget_seconds;
    int failed = 0;
    std::string first_bad;
    for (const auto& check : report.checks)
      if (!check.pass && failed++ == 0) first_bad = check.id;

    std::printf("criterion %d (%s): %s (%zu checks, %.2fs)\n", c.number, c.label,
                pass && in_budget ? "PASS" : "FAIL", report.checks.size(), elapsed);
    if (!pass)
      std::printf("  first failing identity: %s\n", first_bad.c_str());
    if (!in_budget)
      std::printf("  over budget: %.2fs > %.0fs\n", elapsed, c.budget_seconds);
    for (const auto& note : report.notes) std::printf("  note: %s\n", note.c_str());
    if (!pass || !in_budget) ++failures;
  }
  std::printf("%s\n", failures == 0 ? "ACCEPTANCE: ALL CRITERIA PASS"
                                    : "ACCEPTANCE: FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
