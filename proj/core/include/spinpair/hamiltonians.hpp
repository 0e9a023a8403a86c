#pragma once

// Two-qubit Hamiltonians compatible with each P symmetry, thermal states
// and unitary evolution.

#include <array>

#include "spinpair/matkernel.hpp"
#include "spinpair/states.hpp"
#include "spinpair/symmetry.hpp"

namespace spinpair {

/// Field B, exchange J and the family's DM/KSEA triple (see the legend in
/// states.hpp: P23 carries Gamma_x, Gamma_y, Gamma_z; P14 Gamma_x, D_y, D_z;
/// P2bar3bar D_x, D_y, Gamma_z; P1bar4bar D_x, Gamma_y, D_z).
struct HamiltonianSpec {
  FamilyTag family = FamilyTag::P23;
  double bx = 0, by = 0, bz = 0;
  double jx = 0, jy = 0, jz = 0;
  double mix_a = 0, mix_b = 0, mix_c = 0;

  [[nodiscard]] std::array<double, 9> params() const noexcept {
    return {bx, by, bz, jx, jy, jz, mix_a, mix_b, mix_c};
  }
};

/// H = B . local_ops + sum J_a s1^a s2^a + mix . cross_ops, in the
/// family's state operators except D_y, which multiplies xz - zx.
/// Commutes exactly with perm_matrix.
ComplexMatrix build(const HamiltonianSpec& h);

/// Unrestricted two-qubit Hamiltonian
///   H = b1 . sigma_1 + b2 . sigma_2 + sum_ab t_ab sigma_1^a sigma_2^b,
/// the full 15-parameter form. Its Gibbs states typically belong to no family.
struct GeneralHamiltonian {
  std::array<double, 3> field1{};
  std::array<double, 3> field2{};
  std::array<std::array<double, 3>, 3> coupling{};
};

ComplexMatrix build_general(const GeneralHamiltonian& h);

/// Zeeman + Heisenberg + DM + KSEA with a uniform field:
///   B.(s1 + s2) + sum J_a s1^a s2^a + D.(s1 x s2) + s1.Gamma.s2,
/// Gamma symmetric traceless with off-diagonals (Gamma_z, Gamma_y, Gamma_x).
GeneralHamiltonian zeeman_heisenberg_dm_ksea(const std::array<double, 3>& field,
                                             const std::array<double, 3>& exchange,
                                             const std::array<double, 3>& dm,
                                             const std::array<double, 3>& ksea);

struct GibbsSpec {
  HamiltonianSpec hamiltonian;
  double beta = 0.0;
};

/// exp(-beta H) / Z. The spectrum is shifted by its minimum before
/// exponentiating so large beta does not overflow.
DensityMatrix gibbs(const GibbsSpec& g);
DensityMatrix gibbs(const ComplexMatrix& h, double beta);

/// exp(-iHt) rho0 exp(iHt). rho0 must commute with the Hamiltonian's P
/// operator (SymmetryViolation otherwise).
DensityMatrix evolve(const DensityMatrix& rho0, const HamiltonianSpec& h, double t,
                     double tol = kCommuteTol);

}  // namespace spinpair
