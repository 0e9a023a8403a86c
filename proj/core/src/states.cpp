#include "spinpair/states.hpp"

#include <algorithm>
#include <cmath>

#include "spinpair/error.hpp"

namespace spinpair {

namespace {

using P = Pauli;

// sigma_1^a sigma_2^b + sign * sigma_1^b sigma_2^a
ComplexMatrix cross(P a, P b, double sign) {
  return pauli2(a, b) + sign * pauli2(b, a);
}

ComplexMatrix local(P a, double sign) { return pauli2(a, P::I) + sign * pauli2(P::I, a); }

struct FamilyLayout {
  std::array<double, 3> local_signs;
  std::array<ComplexMatrix, 3> mix;
  std::array<std::string_view, 3> legend;
};

const FamilyLayout& layout(FamilyTag family) {
  static const std::array<FamilyLayout, 4> table{
      FamilyLayout{{1, 1, 1},
                   {cross(P::Y, P::Z, 1), cross(P::Z, P::X, 1), cross(P::X, P::Y, 1)},
                   {"gx", "gy", "gz"}},
      FamilyLayout{{1, -1, -1},
                   {cross(P::Y, P::Z, 1), cross(P::Z, P::X, -1), cross(P::X, P::Y, -1)},
                   {"gx", "dy", "dz"}},
      FamilyLayout{{-1, -1, 1},
                   {cross(P::Y, P::Z, -1), cross(P::Z, P::X, -1), cross(P::X, P::Y, 1)},
                   {"dx", "dy", "gz"}},
      FamilyLayout{{-1, 1, -1},
                   {cross(P::Y, P::Z, -1), cross(P::Z, P::X, 1), cross(P::X, P::Y, -1)},
                   {"dx", "gy", "dz"}},
  };
  return table[static_cast<std::size_t>(family)];
}

const std::array<std::array<ComplexMatrix, 9>, 4>& operator_table() {
  static const std::array<std::array<ComplexMatrix, 9>, 4> table = [] {
    std::array<std::array<ComplexMatrix, 9>, 4> t;
    for (FamilyTag f : kAllFamilies) {
      const FamilyLayout& l = layout(f);
      auto& ops = t[static_cast<std::size_t>(f)];
      ops[0] = local(P::X, l.local_signs[0]);
      ops[1] = local(P::Y, l.local_signs[1]);
      ops[2] = local(P::Z, l.local_signs[2]);
      ops[3] = pauli2(P::X, P::X);
      ops[4] = pauli2(P::Y, P::Y);
      ops[5] = pauli2(P::Z, P::Z);
      for (std::size_t k = 0; k < 3; ++k) ops[6 + k] = l.mix[k];
    }
    return t;
  }();
  return table;
}

// Bell-basis diagonal: <Phi+>, <Phi->, <Psi+>, <Psi-> times four. They depend
// on c1, c2, c3 only, for every family.
struct Alphas {
  double a0, a1, a2, a3;
};

Alphas alphas(double c1, double c2, double c3) {
  return {1 - c1 - c2 - c3, 1 - c1 + c2 + c3, 1 + c1 - c2 + c3, 1 + c1 + c2 - c3};
}

std::vector<MinorValue> first_order_minors(const Alphas& a) {
  return {{"1-c1+c2+c3", a.a1},
          {"1+c1-c2+c3", a.a2},
          {"1+c1+c2-c3", a.a3},
          {"1-c1-c2-c3", a.a0}};
}

void append_p23_minors(const BlochState& b, const Alphas& a, std::vector<MinorValue>& out) {
  const double gx = b.mix_a, gy = b.mix_b, gz = b.mix_c;
  const double x2 = b.sx * b.sx + gx * gx;
  const double y2 = b.sy * b.sy + gy * gy;
  const double z2 = b.sz * b.sz + gz * gz;
  out.push_back({"(1-c1+c2+c3)(1+c1-c2+c3)-4(sz^2+gz^2)", a.a1 * a.a2 - 4 * z2});
  out.push_back({"(1+c1-c2+c3)(1+c1+c2-c3)-4(sx^2+gx^2)", a.a2 * a.a3 - 4 * x2});
  out.push_back({"(1-c1+c2+c3)(1+c1+c2-c3)-4(sy^2+gy^2)", a.a1 * a.a3 - 4 * y2});
  const double cubic = gx * b.sy * b.sz + gy * b.sx * b.sz + gz * b.sx * b.sy - gx * gy * gz;
  out.push_back({"third-order minor (P23)",
                 a.a1 * a.a2 * a.a3 - 4 * (a.a1 * x2 + a.a2 * y2 + a.a3 * z2) + 16 * cubic});
}

void append_p14_minors(const BlochState& b, const Alphas& a, std::vector<MinorValue>& out) {
  const double gx = b.mix_a, dy = b.mix_b, dz = b.mix_c;
  const double x2 = b.sx * b.sx + gx * gx;
  const double y2 = b.sy * b.sy + dy * dy;
  const double z2 = b.sz * b.sz + dz * dz;
  out.push_back({"(1+c1+c2-c3)(1+c1-c2+c3)-4(sx^2+gx^2)", a.a3 * a.a2 - 4 * x2});
  out.push_back({"(1-c1-c2-c3)(1+c1-c2+c3)-4(sy^2+dy^2)", a.a0 * a.a2 - 4 * y2});
  out.push_back({"(1-c1-c2-c3)(1+c1+c2-c3)-4(sz^2+dz^2)", a.a0 * a.a3 - 4 * z2});
  const double cubic = b.sx * b.sy * dz + gx * b.sy * b.sz + gx * dy * dz - b.sx * dy * b.sz;
  out.push_back({"third-order minor (P14)",
                 a.a0 * a.a3 * a.a2 - 4 * (a.a0 * x2 + a.a3 * y2 + a.a2 * z2) - 16 * cubic});
}

// 4 O^T rho O is affine in the parameters. The sampler evaluates only the
// entries it needs, reading coefficients from this table.
struct BlockMap {
  // Diagonal of the 3x3 block then the scalar, per parameter.
  std::array<std::array<double, 9>, 4> diag{};
  // Upper off-diagonals (0,1), (0,2), (1,2), per parameter.
  std::array<std::array<cplx, 9>, 3> off{};
  // Non-diagonal parameters first needed by each off-diagonal entry, so a
  // draw can stop at the first failing 2x2 minor.
  std::array<std::vector<std::size_t>, 3> stage;
};

const BlockMap& block_map(FamilyTag family) {
  static const std::array<BlockMap, 4> table = [] {
    std::array<BlockMap, 4> t;
    for (FamilyTag f : kAllFamilies) {
      BlockMap& map = t[static_cast<std::size_t>(f)];
      for (std::size_t k = 0; k < 9; ++k) {
        const BlockReduction r = block_reduce(family_operators(f)[k], f);
        for (std::size_t i = 0; i < 3; ++i) map.diag[i][k] = r.block3(i, i).real();
        map.diag[3][k] = r.scalar1.real();
        map.off[0][k] = r.block3(0, 1);
        map.off[1][k] = r.block3(0, 2);
        map.off[2][k] = r.block3(1, 2);
      }
      std::array<bool, 9> drawn{};
      drawn[3] = drawn[4] = drawn[5] = true;
      for (std::size_t e = 0; e < 3; ++e)
        for (std::size_t k = 0; k < 9; ++k)
          if (!drawn[k] && map.off[e][k] != 0.0) {
            map.stage[e].push_back(k);
            drawn[k] = true;
          }
      for (std::size_t k = 0; k < 9; ++k)
        if (!drawn[k]) map.stage[2].push_back(k);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(family)];
}

constexpr std::uint64_t kAttemptBudget = 10'000'000;

}  // namespace

std::optional<std::size_t> bloch_field_index(std::string_view name, FamilyTag family) {
  for (std::size_t k = 0; k < kBlochFieldNames.size(); ++k)
    if (kBlochFieldNames[k] == name) return k;
  const auto legend = layout(family).legend;
  for (std::size_t k = 0; k < 3; ++k)
    if (legend[k] == name) return 6 + k;
  return std::nullopt;
}

std::array<std::string_view, 3> mix_legend(FamilyTag family) { return layout(family).legend; }

const std::array<ComplexMatrix, 9>& family_operators(FamilyTag family) {
  return operator_table()[static_cast<std::size_t>(family)];
}

DensityMatrix to_matrix(const BlochState& b) {
  const auto& ops = family_operators(b.family);
  const auto p = b.params();
  ComplexMatrix m = ComplexMatrix::identity(4);
  for (std::size_t k = 0; k < 9; ++k)
    if (p[k] != 0.0) m += p[k] * ops[k];
  m *= 0.25;
  return {std::move(m)};
}

BlochState from_matrix(const DensityMatrix& rho, FamilyTag family, double tol) {
  if (rho.m.dim() != 4) throw InvalidArgument("from_matrix: expected a 4x4 matrix");
  const double defect = symmetry_defect(rho.m, family);
  if (defect > tol) {
    throw SymmetryViolation("from_matrix: matrix does not commute with " +
                                std::string(to_string(family)) +
                                " (max |rho P - P rho| = " + std::to_string(defect) + ")",
                            defect);
  }
  const auto& ops = family_operators(family);
  std::array<double, 9> p{};
  for (std::size_t k = 0; k < 9; ++k) {
    // tr(T_k T_k) = 4 for a single Pauli string, 8 for a two-term sum.
    const double weight = k >= 3 && k < 6 ? 1.0 : 2.0;
    p[k] = (rho.m * ops[k]).trace().real() / weight;
  }
  return BlochState::from_params(family, p);
}

bool ValidityReport::minors_nonnegative(double tol) const noexcept {
  return std::all_of(minors.begin(), minors.end(),
                     [tol](const MinorValue& m) { return m.value >= -tol; });
}

std::vector<MinorValue> ValidityReport::violated_minors(double tol) const {
  std::vector<MinorValue> out;
  std::copy_if(minors.begin(), minors.end(), std::back_inserter(out),
               [tol](const MinorValue& m) { return m.value < -tol; });
  return out;
}

ValidityReport validity(const BlochState& b) {
  ValidityReport report;
  const Alphas a = alphas(b.c1, b.c2, b.c3);
  report.minors = first_order_minors(a);
  if (b.family == FamilyTag::P23) append_p23_minors(b, a, report.minors);
  if (b.family == FamilyTag::P14) append_p14_minors(b, a, report.minors);

  report.min_eigenvalue = hermitian_eigenvalues(to_matrix(b).m).min();
  report.valid = report.min_eigenvalue >= -kValidityClamp;
  return report;
}

BlockReduction quasidiagonal(const BlochState& b) {
  if (b.family != FamilyTag::P23) {
    throw InvalidArgument("quasidiagonal: symbolic form is only available for P23 states (got " +
                          std::string(to_string(b.family)) + ")");
  }
  const Alphas a = alphas(b.c1, b.c2, b.c3);
  const double gx = b.mix_a, gy = b.mix_b, gz = b.mix_c;
  const cplx i(0, 1);
  BlockReduction out{ComplexMatrix{{a.a3, 2.0 * b.sx + 2.0 * i * gx, 2.0 * gy + 2.0 * i * b.sy},
                                   {2.0 * b.sx - 2.0 * i * gx, a.a2, 2.0 * b.sz + 2.0 * i * gz},
                                   {2.0 * gy - 2.0 * i * b.sy, 2.0 * b.sz - 2.0 * i * gz, a.a1}},
                     a.a0 / 4.0, 0.0};
  out.block3 *= 0.25;
  return out;
}

DomainSampler::DomainSampler(FamilyTag family, std::uint64_t seed)
    : family_(family), engine_(seed) {}

double DomainSampler::uniform() {
  // Each engine output supplies two 32-bit halves.
  std::uint32_t bits;
  if (has_spare_) {
    bits = spare_;
    has_spare_ = false;
  } else {
    const std::uint64_t word = engine_();
    bits = static_cast<std::uint32_t>(word >> 32);
    spare_ = static_cast<std::uint32_t>(word);
    has_spare_ = true;
  }
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-32;
}

std::optional<BlochState> DomainSampler::try_draw() {
  constexpr double eps = 1e-12;
  ++attempts_;
  const BlockMap& map = block_map(family_);
  // The Bell-basis weights alpha/4 are barycentric coordinates of (c1, c2, c3)
  // in the tetrahedron where all four are nonnegative, so uniform spacings of
  // three sorted uniforms give the cube's accepted c-marginal exactly. No
  // cube draw of c1..c3 is wasted.
  std::array<double, 3> u{uniform(), uniform(), uniform()};
  std::sort(u.begin(), u.end());
  const std::array<double, 4> w{u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]};
  std::array<double, 9> p{};
  p[3] = w[2] + w[3] - w[0] - w[1];
  p[4] = w[1] + w[3] - w[0] - w[2];
  p[5] = w[1] + w[2] - w[0] - w[3];
  std::array<double, 4> d{};
  for (std::size_t i = 0; i < 4; ++i)
    d[i] = 1.0 + map.diag[i][3] * p[3] + map.diag[i][4] * p[4] + map.diag[i][5] * p[5];

  // Sylvester on the remaining principal minors of the 3x3 block.
  constexpr std::array<std::array<std::size_t, 2>, 3> pair{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<cplx, 3> o{};
  std::array<double, 3> n{};
  for (std::size_t e = 0; e < 3; ++e) {
    for (std::size_t k : map.stage[e]) p[k] = 2.0 * uniform() - 1.0;
    for (std::size_t k = 0; k < 9; ++k) o[e] += map.off[e][k] * p[k];
    n[e] = std::norm(o[e]);
    if (d[pair[e][0]] * d[pair[e][1]] - n[e] < -eps) return std::nullopt;
  }
  const double n01 = n[0], n02 = n[1], n12 = n[2];
  const double det = d[0] * d[1] * d[2] + 2.0 * (o[0] * o[2] * std::conj(o[1])).real() -
                     d[0] * n12 - d[1] * n02 - d[2] * n01;
  if (det < -eps) return std::nullopt;

  const BlochState b = BlochState::from_params(family_, p);
  if (!validity(b).valid) return std::nullopt;
  ++accepted_;
  return b;
}

BlochState DomainSampler::next() {
  for (std::uint64_t n = 0; n < kAttemptBudget; ++n)
    if (auto b = try_draw()) return *b;
  throw NumericalFailure("sample_domain: acceptance rate below 1e-6 for " +
                         std::string(to_string(family_)));
}

std::vector<BlochState> sample_domain(FamilyTag family, std::uint64_t seed, std::size_t count) {
  if (count < 1) throw InvalidArgument("sample_domain: count must be >= 1");
  DomainSampler sampler(family, seed);
  std::vector<BlochState> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(sampler.next());
  return out;
}

}  // namespace spinpair
