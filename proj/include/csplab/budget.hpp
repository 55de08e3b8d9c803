#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace csplab {

/// Thrown when an enumeration would exceed the configured state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultBudget = 5'000'000;

/// Cap on explored states; CSP_LAB_BUDGET overrides the default.
inline std::size_t enumeration_budget() {
  if (const char* env = std::getenv("CSP_LAB_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultBudget;
}

}  // namespace csplab
