#pragma once

#include <stdexcept>
#include <string>

namespace trisys {

/// A declared precondition of an operation does not hold (exit code 1 paths
/// carry reports instead; this is for contract violations the caller opted
/// into).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A computation would exceed the configured coefficient budget.
struct resource_error : std::runtime_error {
  resource_error(const std::string& what, long long required, long long budget)
      : std::runtime_error(what), required_coefficients(required),
        budget_coefficients(budget) {}
  long long required_coefficients;
  long long budget_coefficients;
};

/// Malformed input text; position is 1-based.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, int line, int column)
      : std::runtime_error(what), line(line), column(column) {}
  int line;
  int column;
};

inline constexpr long long kDefaultBudget = 2'000'000;

}  // namespace trisys
