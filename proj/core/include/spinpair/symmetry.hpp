#pragma once

// The four signed permutation operators that leave sigma_y (x) sigma_y
// invariant, the orthogonal Bell-basis transforms that reduce them, and the
// 3 (+) 1 block structure they induce on commuting matrices.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinpair/matkernel.hpp"

namespace spinpair {

enum class FamilyTag { P23, P14, P2bar3bar, P1bar4bar };

inline constexpr std::array<FamilyTag, 4> kAllFamilies{FamilyTag::P23, FamilyTag::P14,
                                                       FamilyTag::P2bar3bar, FamilyTag::P1bar4bar};

std::string_view to_string(FamilyTag tag) noexcept;
/// Accepts the canonical names ("P23", "P14", "P2bar3bar", "P1bar4bar").
std::optional<FamilyTag> parse_family(std::string_view name) noexcept;

/// Signed permutation matrix P for the tag; symmetric and involutive.
const ComplexMatrix& perm_matrix(FamilyTag tag);

/// sqrt(2) * O, with integer entries; (U^T U) = 2 I exactly.
const ComplexMatrix& reducing_transform_unscaled(FamilyTag tag);

/// Orthogonal, columns are Bell vectors with the P = -1 eigenvector last, so
/// that O^T P O = diag(1, 1, 1, -1).
const ComplexMatrix& reducing_transform(FamilyTag tag);

/// max |rho P - P rho| entry.
double symmetry_defect(const ComplexMatrix& rho, FamilyTag tag);

inline constexpr double kCommuteTol = 1e-10;

bool commutes_with(const ComplexMatrix& rho, FamilyTag tag, double tol = kCommuteTol);

/// Every tag whose P commutes with rho; may be empty or contain several.
std::vector<FamilyTag> classify(const ComplexMatrix& rho, double tol = kCommuteTol);

struct BlockReduction {
  ComplexMatrix block3;
  cplx scalar1;
  /// Largest off-block entry of O^T M O.
  double residual = 0.0;
};

/// O^T M O split into its leading 3x3 block and trailing scalar.
BlockReduction block_reduce(const ComplexMatrix& m, FamilyTag tag);

/// Characters of the defining representation on {E, P}.
struct CharacterRow {
  double chi_e = 0.0;
  double chi_p = 0.0;
};

CharacterRow defining_characters(FamilyTag tag);

struct IrrepMultiplicities {
  int a1 = 0;
  int a2 = 0;
  friend bool operator==(const IrrepMultiplicities&, const IrrepMultiplicities&) = default;
};

/// Multiplicities of the trivial and sign irreps of the order-2 group {E, P}.
/// Throws InvalidArgument when the characters do not decompose into whole
/// multiplicities.
IrrepMultiplicities irrep_multiplicities(const CharacterRow& rep);

}  // namespace spinpair
