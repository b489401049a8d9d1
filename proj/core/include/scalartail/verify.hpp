#pragma once

#include <string>
#include <vector>

namespace scalartail {

struct VerifyCheck {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

// Runs the built-in identity suite (kernel recurrence, normalization
// integral, angular moments, static reduction, uniform-motion constants, mode
// equivalence, coincidence decay, static energy, mass cross-check). With
// fault_inject the kernel recurrence check is evaluated against a perturbed
// J2, which must make that check fail.
VerifyReport verify_suite(bool fault_inject = false);

}  // namespace scalartail
