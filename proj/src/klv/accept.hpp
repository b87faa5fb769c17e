#pragma once

#include <string>
#include <vector>

namespace klv::accept {

// One named sub-check inside a criterion.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Outcome of one acceptance criterion. `detail` is a one-line summary; when
// the criterion fails it names a concrete counterexample rather than just a
// count, so a failure in a report is reproducible directly.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  std::string json() const;
};

// Runs acceptance criterion `id` (1..9); InvalidArg outside that range.
//
//   1  grassmannian pairing identity on the full N <= 5 grid
//   2  lambda-functional reduction against the localization sum, m <= 3
//   3  moduli pairing vs truncated trace with twist scans, (r,n) grid
//   4  rank-0 rules: empty localization sum and eventual trace vanishing
//   5  rank-1 vanishing for first-slot multiples of the raising killer
//   6  partition function: closed form, stabilization, infinite-trace form
//   7  wedge-space identity suite
//   8  triangular conjugation matrix: shape and nilpotency window
//   9  finite-grid probe converging toward the localization value
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

// Aggregate report; `schema_id` tags the document for validation.
std::string report_json(const std::vector<CriterionResult>& results);

}  // namespace klv::accept
