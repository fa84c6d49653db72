#ifndef HAMREP_SUITES_HPP
#define HAMREP_SUITES_HPP

/// @file  suites.hpp
/// @brief Named verification suites aggregating the library's property
///        checks into deterministic, JSON-serializable reports.

#include <string>
#include <vector>

#include "hamrep/uir.hpp"

#include <nlohmann/json_fwd.hpp>

namespace hamrep {

/// Shared configuration for all suites.  Trials/seed feed the seeded
/// property checks; labels feed the representation suites; n bounds the
/// space dimensions exercised where a suite is dimension-parameterized.
struct SuiteConfig {
  int n = 3;
  int trials = 200;
  unsigned seed = 42;
  RepLabels labels;  ///< defaults: lambda=mu=alpha=kappa=hbar=1, j=1/2
  double tol = 1e-9;
  double tol_matrix = 1e-10;
  /// Optional family filter for the uir-homomorphism suite; accepted
  /// tokens: h, wh, ha, ga, qha (empty = all).
  std::vector<std::string> families;

  void validate() const;  ///< throws Error on trials < 1, n < 1, tol <= 0
};

/// One named check inside a suite.
struct CheckResult {
  std::string name;
  bool pass = false;
  double max_dev = 0.0;  ///< 0 for exact (rational) checks
  std::string detail;    ///< expected/actual summary on failure, else empty
};

/// One suite's outcome.
struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;  ///< oracle adjudications, sign choices
};

/// Canonical suite names in deterministic (sorted) order:
/// algebra, casimir, casimir-count, cocycle, cover, enveloping,
/// matrix-oracle, uir-homomorphism.
std::vector<std::string> all_suite_names();

/// Resolves aliases ("uir" -> "uir-homomorphism"); throws Error for an
/// unknown suite name.
std::string canonical_suite_name(const std::string& name);

/// Runs one suite by canonical name; throws Error for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

/// Full report: {"schema": "hamrep/1", "config": {...}, "suites": [...],
/// "pass": bool}, with suites ordered by name.
nlohmann::json report_to_json(const std::vector<SuiteResult>& suites,
                              const SuiteConfig& config);

}  // namespace hamrep

#endif  // HAMREP_SUITES_HPP
