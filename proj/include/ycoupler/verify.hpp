#pragma once

#include <string>
#include <vector>

namespace ycoupler {

struct VerifyResult {
  std::string suite;
  std::string name;
  bool passed = false;
  /// Worst deviation seen against the check's bound.
  double deviation = 0.0;
  double bound = 0.0;
};

/// Invariant battery over every module: closed-form matrices, symmetry
/// properties over random parameter draws, solver against closed forms,
/// round-trip iteration against the solver, two-photon and spectral checks.
/// Deterministic (fixed seed).
std::vector<VerifyResult> run_verification();

}  // namespace ycoupler
