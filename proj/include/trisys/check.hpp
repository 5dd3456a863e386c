#pragma once

#include "trisys/exactlin.hpp"

#include <string>
#include <vector>

namespace trisys {

/// One violated axiom instance: which law, at which basis tuple, and the
/// residual vector that should have been zero.
struct Violation {
  std::string law;
  std::vector<int> where;
  Vector residual;
};

struct CheckReport {
  std::string subject;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<int> where, Vector residual) {
    violations.push_back({std::move(law), std::move(where), std::move(residual)});
  }
  void merge(const CheckReport& other) {
    for (const auto& v : other.violations) violations.push_back(v);
  }
};

}  // namespace trisys
