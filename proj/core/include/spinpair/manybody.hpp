#pragma once

// Permutation-symmetric N-qubit states (2 <= N <= 5) and their two-qubit
// reductions, which always land in the P23 family.

#include <array>
#include <cstdint>
#include <vector>

#include "spinpair/matkernel.hpp"
#include "spinpair/states.hpp"

namespace spinpair {

inline constexpr int kMaxQubits = 5;

/// Qubit 1 is the most significant bit of the basis index.
struct ManyBodyState {
  int n = 2;
  ComplexMatrix m;
};

/// Throws InvalidArgument unless 2 <= n <= 5 and m is 2^n x 2^n.
void check_shape(const ManyBodyState& rho);

/// Unitary relabelling qubits: qubit k of the input ends up at position
/// perm[k] (zero-based).
ComplexMatrix permutation_unitary(int n, const std::vector<int>& perm);

/// Average of U rho U^dagger over all n! qubit permutations.
ManyBodyState twirl_symmetrize(const ManyBodyState& rho);

/// Partial trace onto qubits i and j (one-based, i != j), ordered i (x) j.
DensityMatrix reduce_pair(const ManyBodyState& rho, int i, int j);

struct MomentSet {
  /// <sigma^a> on any single site.
  std::array<double, 3> s{};
  /// <sigma_1^a sigma_2^b>, symmetric.
  std::array<std::array<double, 3>, 3> t{};
};

/// Largest |rho - U rho U^dagger| over adjacent transpositions.
double permutation_asymmetry(const ManyBodyState& rho);

/// Single-site and pair moments of a permutation-symmetric state. Throws
/// SymmetryViolation when the state is not symmetric to 1e-10.
MomentSet moments_of(const ManyBodyState& rho);

/// P23 state with s from ms.s, c1..c3 from the diagonal of ms.t, and
/// g_x = t_yz, g_y = t_xz, g_z = t_xy. Throws InvalidState if the result is
/// not a valid state.
BlochState pair_from_moments(const MomentSet& ms);

/// A A^dagger / tr(A A^dagger) with i.i.d. complex Gaussian A, seeded.
ManyBodyState random_state(int n, std::uint64_t seed);

}  // namespace spinpair
