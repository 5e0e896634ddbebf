#pragma once

#include <string>
#include <vector>

#include "groupcx/catalog.hpp"

namespace groupcx {

struct VerifyOutcome {
  std::string check;   // check family, e.g. "skeleton_A"
  std::string group;   // catalog name, or "-" for group-free checks
  bool pass = false;
  std::string detail;  // short machine-readable payload
};

enum class Suite { Core, Gk, Homology, All };

struct VerifyOptions {
  bool include_slow = false;
  Caps caps;
};

/// Runs the full check matrix for a suite, one outcome per (check, group)
/// pair, no short-circuiting. Failures are outcomes, not exceptions.
std::vector<VerifyOutcome> run_suite(Suite suite,
                                     const std::vector<CatalogEntry>& catalog,
                                     const VerifyOptions& opts);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 means no stated budget
  int checks = 0;
  int failures = 0;
  std::vector<VerifyOutcome> outcomes;
};

/// The ten acceptance criteria, each timed against its stated budget.
std::vector<CriterionResult> run_acceptance(
    const std::vector<CatalogEntry>& catalog, const VerifyOptions& opts);

/// Exhaustive all-subsets facet oracle for a hereditary predicate on
/// 0..universe-1 (universe <= 20): filters accepted sets and keeps those
/// with no accepted one-vertex extension. Also re-checks heredity on every
/// accepted set. Independent of the backtracking enumerator it validates.
struct OracleResult {
  std::vector<std::vector<int>> facets;
  bool hereditary = true;
};
OracleResult exhaustive_facet_oracle(
    int universe, const std::function<bool(const std::vector<int>&)>& pred);

}  // namespace groupcx
