// One PASS/FAIL line per acceptance criterion, each run at its stated size
// and held to its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "str0d/verify.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(str0d::Recorder&)> run;
};

}  // namespace

int main() {
  using namespace str0d;
  const std::vector<Criterion> criteria{
      {1, "congruence lattices match partition search on frames <= 5", 10, [](Recorder& r) { verify_oracle(r, 5); }},
      {2, "|C L| = 2^|J(L)| and C L Boolean on frames <= 6", 60, [](Recorder& r) { verify_structure(r, 6); }},
      {3, "quotient, closure and pushout lemmas on frames <= 4", 300, [](Recorder& r) { verify_lemmas(r, 4); }},
      {4, "C -| P bijection and triangle identities, frames <= 4, totals <= 8", 300,
       [](Recorder& r) { verify_adjunction(r, 4, 8); }},
      {5, "fibres are singletons on frames <= 6, chi invertible on totals <= 16", 120,
       [](Recorder& r) { verify_fibres(r, 6, 16); }},
      {6, "mono and extremal-epi classification on totals <= 8", 300,
       [](Recorder& r) { verify_classification(r, 8); }},
      {7, "limits and colimits of pairs, arrows and parallel pairs over frames <= 4", 600,
       [](Recorder& r) { verify_limits(r, 4, 8); }},
      {8, "clear-element conditions on totals <= 16", 120, [](Recorder& r) { verify_clear(r, 16); }},
      {9, "congruence-frame recognizer on frames <= 8", 300, [](Recorder& r) { verify_recognizer(r, 8); }},
      {10, "Skula biframes of T0 spaces <= 4 points", 120, [](Recorder& r) { verify_skula(r, 4); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    VerifyReport report;
    auto start = std::chrono::steady_clock::now();
    {
      Recorder r(report);
      c.run(r);
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = report.passed() && s < c.budget_s;
    failures += !ok;
    std::printf("%s criterion %d: %s (%zu checks, %zu violations, %.2f s of %.0f s)\n", ok ? "PASS" : "FAIL", c.id,
                c.title, report.instances, report.violations.size(), s, c.budget_s);
    for (const Violation& v : report.violations)
      std::printf("  violation: %s %s\n", v.check.c_str(), v.counterexample.dump().c_str());
  }
  return failures == 0 ? 0 : 1;
}
