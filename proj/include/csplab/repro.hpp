#pragma once

// Acceptance suite: each criterion recomputes a published table and compares
// it with the literal values.

#include <string>
#include <vector>

#include <json.hpp>

namespace csplab {

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool pass = false;
  /// Optional status shown instead of PASS (e.g. CONJECTURE-CONFIRMED).
  std::string label;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0.0;
  double limit_seconds = 0.0;
};

struct ReproOptions {
  /// Criterion keys or numeric ids; empty runs everything.
  std::vector<std::string> only;
  /// Negative control: flips the sign twist used by the invariant route.
  bool sabotage_twist = false;
  /// Run criteria concurrently; results keep declaration order.
  bool parallel = false;
};

struct CriterionInfo {
  int id;
  std::string key;
  std::string title;
  double limit_seconds;
};

const std::vector<CriterionInfo>& acceptance_criteria();

/// Throws std::invalid_argument on an unknown key in options.only.
std::vector<CriterionResult> run_acceptance(const ReproOptions& options = {});

/// "PASS  [ 9] g2  ..." followed by indented failure and note lines. Timings
/// are left out so that reports are reproducible.
std::string format_result(const CriterionResult& r);
nlohmann::json to_json(const CriterionResult& r);

}  // namespace csplab
