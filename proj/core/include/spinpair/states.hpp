#pragma once

// Nine-parameter two-qubit state families, one per P operator.
//
// Every family shares the form
//
//   rho = 1/4 [ 1 + sum_k p_k T_k ],
//
// where the nine operators T_k are: three single-site sums
// sigma_1^a +/- sigma_2^a (s_x, s_y, s_z), the diagonal couplings
// sigma_1^a sigma_2^a (c1, c2, c3), and a family-specific triple of
// symmetric (g) or antisymmetric (delta) cross couplings stored in
// mix_a, mix_b, mix_c:
//
//   family      s signs   mix_a              mix_b              mix_c
//   P23         + + +     g_x = yz + zy      g_y = zx + xz      g_z = xy + yx
//   P14         + - -     g_x = yz + zy      d_y = zx - xz      d_z = xy - yx
//   P2bar3bar   - - +     d_x = yz - zy      d_y = zx - xz      g_z = xy + yx
//   P1bar4bar   - + -     d_x = yz - zy      g_y = zx + xz      d_z = xy - yx
//
// ("ab" means sigma_1^a sigma_2^b.) The Hamiltonians in hamiltonians.hpp
// expand in the same operator sets, except that their D_y multiplies
// xz - zx, the negative of the states' d_y operator.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spinpair/matkernel.hpp"
#include "spinpair/symmetry.hpp"

namespace spinpair {

struct BlochState {
  FamilyTag family = FamilyTag::P23;
  double sx = 0, sy = 0, sz = 0;
  double c1 = 0, c2 = 0, c3 = 0;
  double mix_a = 0, mix_b = 0, mix_c = 0;

  /// sx, sy, sz, c1, c2, c3, mix_a, mix_b, mix_c.
  [[nodiscard]] std::array<double, 9> params() const noexcept {
    return {sx, sy, sz, c1, c2, c3, mix_a, mix_b, mix_c};
  }
  static BlochState from_params(FamilyTag family, const std::array<double, 9>& p) noexcept {
    return {family, p[0], p[1], p[2], p[3], p[4], p[5], p[6], p[7], p[8]};
  }

  friend bool operator==(const BlochState&, const BlochState&) = default;
};

inline constexpr std::array<std::string_view, 9> kBlochFieldNames{
    "sx", "sy", "sz", "c1", "c2", "c3", "mix_a", "mix_b", "mix_c"};

/// Index into params() for a field name. Besides the canonical names this
/// accepts the family's legend aliases (gx, gy, gz, dx, dy, dz) where they
/// apply to `family`.
std::optional<std::size_t> bloch_field_index(std::string_view name, FamilyTag family);

/// Legend names ("gx", "dy", ...) of mix_a, mix_b, mix_c for a family.
std::array<std::string_view, 3> mix_legend(FamilyTag family);

/// Operator basis T_0..T_8 for the family, ordered as params().
const std::array<ComplexMatrix, 9>& family_operators(FamilyTag family);

/// A 4x4 density matrix. Construction does not validate; see validity().
struct DensityMatrix {
  ComplexMatrix m;
};

DensityMatrix to_matrix(const BlochState& b);

/// Inverse of to_matrix. Throws SymmetryViolation when rho does not commute
/// with the family's P operator within `tol`.
BlochState from_matrix(const DensityMatrix& rho, FamilyTag family, double tol = kCommuteTol);

struct MinorValue {
  std::string label;
  double value = 0.0;
};

struct ValidityReport {
  bool valid = false;
  /// Principal-minor expressions of the quasidiagonal form (first, second,
  /// third order); all four families report the first-order ones.
  std::vector<MinorValue> minors;
  double min_eigenvalue = 0.0;

  /// Every reported minor is >= -tol.
  [[nodiscard]] bool minors_nonnegative(double tol = 1e-9) const noexcept;
  [[nodiscard]] std::vector<MinorValue> violated_minors(double tol = 1e-9) const;
};

/// Degenerate boundary states down to this eigenvalue are accepted.
inline constexpr double kValidityClamp = 1e-10;

/// Authoritative verdict comes from the eigenvalues of to_matrix(b).
ValidityReport validity(const BlochState& b);

/// Symbolic 3 (+) 1 form of a P23 state in the O23 basis.
BlockReduction quasidiagonal(const BlochState& b);

/// Seeded sampler, uniform over the valid part of [-1, 1]^9. The Bell-basis
/// coordinates are drawn directly inside their tetrahedron and the others by
/// rejection against the block's principal minors.
class DomainSampler {
 public:
  DomainSampler(FamilyTag family, std::uint64_t seed);

  /// One attempt; empty when the draw is rejected.
  std::optional<BlochState> try_draw();
  /// Draw until a valid state is found. Throws NumericalFailure if the
  /// acceptance rate falls below 1e-6 over the attempt budget.
  BlochState next();

  [[nodiscard]] std::uint64_t attempts() const noexcept { return attempts_; }
  [[nodiscard]] std::uint64_t accepted() const noexcept { return accepted_; }

 private:
  double uniform();

  FamilyTag family_;
  std::mt19937_64 engine_;
  std::uint32_t spare_ = 0;
  bool has_spare_ = false;
  std::uint64_t attempts_ = 0;
  std::uint64_t accepted_ = 0;
};

std::vector<BlochState> sample_domain(FamilyTag family, std::uint64_t seed, std::size_t count);

}  // namespace spinpair
