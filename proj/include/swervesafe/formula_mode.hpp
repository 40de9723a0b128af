#pragma once

#include <stdexcept>
#include <string>

namespace swervesafe {

// A few published formulas contain typos (dimensional inconsistencies,
// duplicated max terms). Corrected is the default; Literal evaluates the
// expressions exactly as printed, for auditing the difference.
enum class FormulaMode { Corrected, Literal };

// Inputs outside a formula's domain (infeasible lane change, zero manoeuvre
// speed, unreachable clearance, low-speed tire-model singularity).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swervesafe
