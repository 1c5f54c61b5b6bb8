#pragma once

// Runnable invariant suite behind `parallelo selftest`. Each check is an
// independent property over a fixed range; the brute-force helpers here are
// oracles and do not share code paths with the counting routes.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parallelo/lattice.hpp"

namespace parallelo {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

struct CheckOptions {
  bool quick = false;  // n <= 100 style ranges
  unsigned threads = 1;
  /// Route under test for the oracle-equivalence check; defaults to count_formula.
  std::function<std::int64_t(const CanonicalParallelogram&)> formula_count;
  /// Invoked after each check completes.
  std::function<void(const CheckResult&)> on_result;
};

std::vector<CheckResult> run_invariant_checks(const CheckOptions& options = {});

/// Lattice points strictly inside the parallelogram spanned by u and v,
/// found by scanning its bounding box with an exact containment test.
std::vector<LatticePoint> brute_force_interior(const LatticePoint& u, const LatticePoint& v);

/// Visible points among brute_force_interior(u, v).
std::int64_t brute_force_visible(const LatticePoint& u, const LatticePoint& v);

}  // namespace parallelo
