#pragma once

// Peres-Horodecki (PPT) separability, boundary location along parameter
// paths, and two-parameter phase-diagram scans.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "spinpair/matkernel.hpp"
#include "spinpair/states.hpp"

namespace spinpair {

/// Transpose on the second qubit's indices.
ComplexMatrix partial_transpose(const ComplexMatrix& rho);

/// Lowest eigenvalue of the partial transpose; >= 0 iff separable.
double ppt_min_eig(const DensityMatrix& rho);

/// ppt_min_eig at or above this counts as separable.
inline constexpr double kSeparableTol = 1e-12;

using StatePath = std::function<BlochState(double)>;

/// Bisects ppt_min_eig(path(u)) = 0 on [u_lo, u_hi] until the bracket is
/// narrower than tol. The endpoints must straddle the separability threshold
/// and every visited state must be valid (InvalidState otherwise, naming u).
double boundary_bisect(const StatePath& path, double u_lo, double u_hi, double tol);

struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;

  /// lo + i (hi - lo) / (steps - 1)
  [[nodiscard]] double at(int i) const noexcept;
};

struct ScanConfig {
  FamilyTag family = FamilyTag::P23;
  BlochState fixed;
  std::string axis1;
  std::string axis2;
  AxisRange range1;
  AxisRange range2;
};

/// Throws InvalidArgument for steps < 2, lo >= hi, unknown or repeated axes.
void validate(const ScanConfig& cfg);

struct ScanCell {
  double u1 = 0.0;
  double u2 = 0.0;
  bool in_domain = false;
  /// NaN outside the domain.
  double concurrence = 0.0;
  double ppt_min_eig = 0.0;
  /// Spectrum of R behind the concurrence, non-increasing; NaN outside.
  std::array<double, 4> lambdas{};
};

struct ScanGrid {
  ScanConfig config;
  /// Row-major with axis1 fastest: cell (i, j) at j * steps1 + i.
  std::vector<ScanCell> cells;
};

enum class ScanMethod { ClosedForm, Oracle };

/// Evaluates every cell; `jobs` workers share the cells, output order is
/// fixed. Throws EmptyResult when no cell is inside the domain.
ScanGrid scan_grid(const ScanConfig& cfg, unsigned jobs = 1,
                   ScanMethod method = ScanMethod::ClosedForm);

/// Evaluates one point of a scan or path.
ScanCell evaluate_point(const BlochState& b, ScanMethod method = ScanMethod::ClosedForm);

}  // namespace spinpair
