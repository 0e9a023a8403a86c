#pragma once

// Concurrence and entanglement of formation.
//
// Two independent routes are provided. wootters_oracle() works for any
// two-qubit state through the spectrum of R = rho * spin_flip(rho).
// closed_form() uses the family's 3 (+) 1 reduction: one eigenvalue of R is
// read off the scalar block, the other three are the trigonometric roots of
// the 3x3 block's characteristic cubic.

#include <array>
#include <string_view>

#include "spinpair/matkernel.hpp"
#include "spinpair/states.hpp"

namespace spinpair {

enum class Method { Oracle, ClosedForm };

std::string_view to_string(Method m) noexcept;

struct EntanglementReport {
  /// Eigenvalues of R, non-increasing, clamped at zero.
  std::array<double, 4> lambdas{};
  double concurrence = 0.0;
  double eof = 0.0;
  Method method = Method::Oracle;
};

/// (sigma_y x sigma_y) rho* (sigma_y x sigma_y).
DensityMatrix spin_flip(const DensityMatrix& rho);

/// Concurrence from a spectrum of R; sorts a copy before use.
double concurrence_from_lambdas(std::array<double, 4> lambdas);

/// Binary-entropy map from concurrence to entanglement of formation. Inputs
/// within 1e-12 outside [0, 1] are clamped, anything further throws.
double eof_from_concurrence(double c);

/// Works for any valid 4x4 density matrix.
EntanglementReport wootters_oracle(const DensityMatrix& rho);

/// Trace, second-order principal-minor sum and determinant of the 3x3 block
/// Q of R' = rho' rho~' (the alphas are the Bell-basis diagonal weights).
struct QInvariants {
  double alpha1 = 0, alpha2 = 0, alpha3 = 0;
  double trace = 0;
  double minor_sum = 0;
  double det = 0;
};

/// Closed-form invariants for P23 states.
QInvariants q_invariants_symbolic(const BlochState& b);

/// The rotated matrix R' = (O^T rho O)(O^T rho~ O) for the state's family:
/// its leading 3x3 block Q and the trailing scalar eigenvalue.
struct ReducedR {
  ComplexMatrix q;
  /// Leading 3x3 blocks of O^T rho O and O^T rho~ O; q = a * b.
  ComplexMatrix a;
  ComplexMatrix b;
  double scalar = 0.0;
  double residual = 0.0;
};

ReducedR reduced_r(const BlochState& b);

/// Invariants computed from a numeric 3x3 block.
QInvariants q_invariants_numeric(const ComplexMatrix& q);

/// The same invariants of Q = A B from its factors (Cauchy-Binet:
/// m = tr(C2(A) C2(B)), det = det A det B). Rank-deficient factors give
/// exactly vanishing invariants instead of cancellation noise.
QInvariants q_invariants_factored(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real roots of x^3 - tr x^2 + m x - det = 0 in trigonometric form, returned
/// as k = 1, 2, 3. A triple root (tr^2 - 3m <= 1e-14) is returned directly.
/// Throws NumericalFailure when the arccos argument overshoots [-1, 1] by
/// more than 1e-12.
std::array<double, 3> trigonometric_roots(double trace, double minor_sum, double det);

/// Recomputes the two smaller of three roots from the largest one through
/// Vieta's relations (x2 + x3 = (m - det/x1)/x1, x3 = det/(x1 x2)), which
/// keeps near-zero roots accurate relative to det instead of to trQ. Returns
/// the roots non-increasing.
std::array<double, 3> refine_small_roots(std::array<double, 3> roots, double minor_sum,
                                         double det);

/// Throws InvalidState when b is not a valid state.
EntanglementReport closed_form(const BlochState& b);

}  // namespace spinpair
