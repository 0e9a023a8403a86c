#include "spinpair/symmetry.hpp"

#include <cmath>
#include <numbers>

#include "spinpair/error.hpp"

namespace spinpair {

namespace {

std::size_t index_of(FamilyTag tag) { return static_cast<std::size_t>(tag); }

const std::array<ComplexMatrix, 4>& perm_table() {
  static const std::array<ComplexMatrix, 4> t{
      ComplexMatrix{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}},
      ComplexMatrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}},
      ComplexMatrix{{1, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}},
      ComplexMatrix{{0, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 0}},
  };
  return t;
}

const std::array<ComplexMatrix, 4>& transform_table() {
  static const std::array<ComplexMatrix, 4> t{
      ComplexMatrix{{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}},
      ComplexMatrix{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, -1, 0}, {1, 0, 0, -1}},
      ComplexMatrix{{0, 1, 1, 0}, {1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, -1, 0}},
      ComplexMatrix{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, -1, 0}, {-1, 0, 0, 1}},
  };
  return t;
}

}  // namespace

std::string_view to_string(FamilyTag tag) noexcept {
  switch (tag) {
    case FamilyTag::P23: return "P23";
    case FamilyTag::P14: return "P14";
    case FamilyTag::P2bar3bar: return "P2bar3bar";
    case FamilyTag::P1bar4bar: return "P1bar4bar";
  }
  return "?";
}

std::optional<FamilyTag> parse_family(std::string_view name) noexcept {
  for (FamilyTag tag : kAllFamilies)
    if (to_string(tag) == name) return tag;
  return std::nullopt;
}

const ComplexMatrix& perm_matrix(FamilyTag tag) { return perm_table()[index_of(tag)]; }

const ComplexMatrix& reducing_transform_unscaled(FamilyTag tag) {
  return transform_table()[index_of(tag)];
}

const ComplexMatrix& reducing_transform(FamilyTag tag) {
  static const std::array<ComplexMatrix, 4> scaled = [] {
    std::array<ComplexMatrix, 4> t;
    for (FamilyTag f : kAllFamilies)
      t[index_of(f)] = std::numbers::sqrt2 / 2.0 * transform_table()[index_of(f)];
    return t;
  }();
  return scaled[index_of(tag)];
}

double symmetry_defect(const ComplexMatrix& rho, FamilyTag tag) {
  if (rho.dim() != 4) throw InvalidArgument("symmetry_defect: expected a 4x4 matrix");
  return commutator_norm(rho, perm_matrix(tag));
}

bool commutes_with(const ComplexMatrix& rho, FamilyTag tag, double tol) {
  return symmetry_defect(rho, tag) <= tol;
}

std::vector<FamilyTag> classify(const ComplexMatrix& rho, double tol) {
  std::vector<FamilyTag> tags;
  for (FamilyTag tag : kAllFamilies)
    if (commutes_with(rho, tag, tol)) tags.push_back(tag);
  return tags;
}

BlockReduction block_reduce(const ComplexMatrix& m, FamilyTag tag) {
  if (m.dim() != 4) throw InvalidArgument("block_reduce: expected a 4x4 matrix");
  // Work with the integer transform and halve at the end: exact scaling.
  const ComplexMatrix& u = reducing_transform_unscaled(tag);
  const ComplexMatrix rotated = 0.5 * (u.transpose() * m * u);

  BlockReduction out{ComplexMatrix(3), rotated(3, 3), 0.0};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out.block3(r, c) = rotated(r, c);
    out.residual = std::max({out.residual, std::abs(rotated(r, 3)), std::abs(rotated(3, r))});
  }
  return out;
}

CharacterRow defining_characters(FamilyTag tag) {
  return {4.0, perm_matrix(tag).trace().real()};
}

IrrepMultiplicities irrep_multiplicities(const CharacterRow& rep) {
  // Order-2 group: the trivial irrep has characters (1, 1), the sign irrep (1, -1).
  constexpr double kGroupOrder = 2.0;
  constexpr double kDrift = 1e-12;
  const double a1 = (rep.chi_e * 1.0 + rep.chi_p * 1.0) / kGroupOrder;
  const double a2 = (rep.chi_e * 1.0 + rep.chi_p * -1.0) / kGroupOrder;
  const double r1 = std::round(a1), r2 = std::round(a2);
  if (std::abs(a1 - r1) > kDrift || std::abs(a2 - r2) > kDrift || r1 < 0 || r2 < 0) {
    throw InvalidArgument("irrep_multiplicities: characters (" + std::to_string(rep.chi_e) +
                          ", " + std::to_string(rep.chi_p) +
                          ") do not decompose into whole multiplicities");
  }
  return {static_cast<int>(r1), static_cast<int>(r2)};
}

}  // namespace spinpair
