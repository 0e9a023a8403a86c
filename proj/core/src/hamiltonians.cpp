#include "spinpair/hamiltonians.hpp"

#include <cmath>
#include <string>

#include "spinpair/error.hpp"

namespace spinpair {

ComplexMatrix build(const HamiltonianSpec& h) {
  // Same nine operators as the states, but D_y couples to xz - zx.
  const auto& ops = family_operators(h.family);
  auto p = h.params();
  if (h.family == FamilyTag::P14 || h.family == FamilyTag::P2bar3bar) p[7] = -p[7];
  ComplexMatrix m(4);
  for (std::size_t k = 0; k < 9; ++k)
    if (p[k] != 0.0) m += p[k] * ops[k];
  return m;
}

ComplexMatrix build_general(const GeneralHamiltonian& h) {
  constexpr std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
  ComplexMatrix m(4);
  for (std::size_t a = 0; a < 3; ++a) {
    if (h.field1[a] != 0.0) m += h.field1[a] * pauli2(axes[a], Pauli::I);
    if (h.field2[a] != 0.0) m += h.field2[a] * pauli2(Pauli::I, axes[a]);
    for (std::size_t b = 0; b < 3; ++b)
      if (h.coupling[a][b] != 0.0) m += h.coupling[a][b] * pauli2(axes[a], axes[b]);
  }
  return m;
}

GeneralHamiltonian zeeman_heisenberg_dm_ksea(const std::array<double, 3>& field,
                                             const std::array<double, 3>& exchange,
                                             const std::array<double, 3>& dm,
                                             const std::array<double, 3>& ksea) {
  GeneralHamiltonian g;
  g.field1 = field;
  g.field2 = field;
  auto& t = g.coupling;
  for (std::size_t a = 0; a < 3; ++a) t[a][a] = exchange[a];
  // D.(s1 x s2): D_x (yz - zy) + D_y (zx - xz) + D_z (xy - yx)
  t[1][2] += dm[0];
  t[2][1] -= dm[0];
  t[2][0] += dm[1];
  t[0][2] -= dm[1];
  t[0][1] += dm[2];
  t[1][0] -= dm[2];
  // Gamma_x (yz + zy) + Gamma_y (zx + xz) + Gamma_z (xy + yx)
  t[1][2] += ksea[0];
  t[2][1] += ksea[0];
  t[2][0] += ksea[1];
  t[0][2] += ksea[1];
  t[0][1] += ksea[2];
  t[1][0] += ksea[2];
  return g;
}

DensityMatrix gibbs(const ComplexMatrix& h, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw InvalidArgument("gibbs: beta must be finite and >= 0 (got " + std::to_string(beta) +
                          ")");
  }
  const HermitianEigen eig = hermitian_eigen(h);
  const double ground = eig.spectrum.min();
  const std::size_t n = h.dim();
  std::vector<double> weights(n);
  double z = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    weights[k] = std::exp(-beta * (eig.spectrum.values[k] - ground));
    z += weights[k];
  }
  ComplexMatrix rho(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      cplx sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += eig.vectors(r, k) * weights[k] * std::conj(eig.vectors(c, k));
      rho(r, c) = sum / z;
    }
  return {std::move(rho)};
}

DensityMatrix gibbs(const GibbsSpec& g) { return gibbs(build(g.hamiltonian), g.beta); }

DensityMatrix evolve(const DensityMatrix& rho0, const HamiltonianSpec& h, double t, double tol) {
  const double defect = symmetry_defect(rho0.m, h.family);
  if (defect > tol) {
    throw SymmetryViolation("evolve: initial state is outside the " +
                                std::string(to_string(h.family)) +
                                " symmetry class (max |rho P - P rho| = " +
                                std::to_string(defect) + ")",
                            defect);
  }
  if (t == 0.0) return rho0;
  const ComplexMatrix u = unitary_propagator(build(h), t);
  return {u * rho0.m * u.adjoint()};
}

}  // namespace spinpair
