#pragma once

#include <string>
#include <vector>

#include "casimir/units.hpp"

namespace casimir::validation {

struct Check {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  /// Relative tolerance unless `absolute` is set.
  double tolerance = 0.0;
  bool absolute = false;
  bool pass = false;
};

struct Report {
  std::vector<Check> checks;
  bool all_pass() const;
};

/// Runs the built-in consistency checks: unit conversions, special functions,
/// the two force algorithms against each other, asymptotic limits, reduction
/// identities, Table-style material numbers and the dipole identities.
/// `constants` is used for every unit conversion, which lets tests perturb it.
Report run_validation(const units::PhysicalConstants& constants = units::kCodata2018, unsigned threads = 1);

}  // namespace casimir::validation
