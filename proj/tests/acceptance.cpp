// One PASS/FAIL line per acceptance criterion. Each criterion runs a suite
// at a pinned seed and trial count and must also finish inside its budget.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nltrace/errors.hpp"
#include "nltrace/harness.hpp"

namespace {

struct Criterion {
  int number;
  std::string suite;
  std::uint64_t trials;
  double budget_ms;
};

constexpr std::uint64_t kSeed = 20240601;

// Trial counts and budgets per criterion. The tolerances live in the suites.
const std::vector<Criterion> kCriteria{
    {1, "step-example", 1, 1.0},
    {2, "matrix-example", 1000, 5000.0},
    {3, "triangle-concave", 1000, 10000.0},
    {4, "quasi-norm-constants", 1000, 10000.0},
    {5, "prop-stieltjes", 10000, 5000.0},
    {6, "partition-upper-sum", 1000, 10000.0},
    {7, "sugeno-maxtype", 1000, 5000.0},
    {8, "sugeno-min-witness", 1000, 2000.0},
    {9, "sugeno-metric", 1000, 10000.0},
    {10, "fuzzy-integrals", 1000, 5000.0},
    {11, "weyl", 1000, 10000.0},
    {12, "eigen-sanity", 300, 1000.0},
};

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : kCriteria) {
    nltrace::SuiteConfig cfg;
    cfg.trials = c.trials;
    cfg.seed = kSeed;
    bool passed = false;
    double worst = 0.0, ms = 0.0;
    std::string metric, note;
    try {
      const auto t0 = std::chrono::steady_clock::now();
      const nltrace::Report r = nltrace::run_suite(c.suite, cfg);
      ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      worst = r.worst;
      metric = r.metric;
      passed = r.passed && ms < c.budget_ms;
      if (!r.passed) note = " witness=" + r.witness.dump();
      else if (ms >= c.budget_ms) note = " over budget";
    } catch (const nltrace::Error& e) {
      note = std::string(" error: ") + e.what();
    }
    if (!passed) ++failures;
    std::printf("criterion %2d %s %-22s trials=%llu %s=%.17g time=%.3fms budget=%.0fms%s\n",
                c.number, passed ? "PASS" : "FAIL", c.suite.c_str(),
                static_cast<unsigned long long>(c.trials), metric.c_str(), worst, ms,
                c.budget_ms, note.c_str());
  }
  return failures == 0 ? 0 : 1;
}
