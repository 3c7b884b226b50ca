#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hochdef/algebra.hpp"
#include "hochdef/eulerian.hpp"
#include "hochdef/lattice.hpp"
#include "hochdef/report.hpp"

namespace hochdef {

// Built-in test algebras: "a3", "a3_rel", "kronecker", "beilinson_p2". Throws IndexOutOfRange.
AlgebraPtr builtin_algebra(std::string_view name);
// Built-in lattices: "p1", "p2", "p1_perturbed". Throws IndexOutOfRange.
GramLattice builtin_lattice(std::string_view name);

struct SelftestOptions {
  Config config;
  EulerianConvention euler;  // overridable to check that a wrong convention is caught
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Report(const SelftestOptions&)> run;
};

// Acceptance criteria 1..11; determinism (12) compares two CLI runs and lives with the
// callers. Each criterion seeds its own generator from the configured seed.
const std::vector<Criterion>& selftest_criteria();

struct CriterionOutcome {
  int id;
  std::string name;
  Report report;
  double seconds;
  double limit_seconds;

  bool passed() const { return report.passed() && seconds <= limit_seconds; }
};

std::vector<CriterionOutcome> run_criteria(const SelftestOptions& options);
// All outcomes merged into one report; checks are prefixed "c<id>.".
Report selftest_report(const std::vector<CriterionOutcome>& outcomes);

}  // namespace hochdef
