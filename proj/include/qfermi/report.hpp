#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qfermi {

/// One (r, n) case where the two sides of an exact identity differ.
struct IdentityFailure {
  int r = 0;
  int n = 0;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

/// Outcome of an exhaustive exact identity check. Failures are data.
struct IdentityReport {
  std::string identity;
  int checked = 0;
  std::vector<IdentityFailure> failures;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

}  // namespace qfermi
