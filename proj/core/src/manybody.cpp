#include "spinpair/manybody.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "spinpair/error.hpp"

namespace spinpair {

namespace {

constexpr double kSymmetryTol = 1e-10;

// Basis-index map for a qubit relabelling: bit of qubit k moves to perm[k].
std::vector<std::size_t> index_map(int n, const std::vector<int>& perm) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::size_t> map(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (int k = 0; k < n; ++k) {
      const std::size_t bit = (x >> (n - 1 - k)) & 1U;
      y |= bit << (n - 1 - perm[k]);
    }
    map[x] = y;
  }
  return map;
}

ComplexMatrix permuted(const ComplexMatrix& m, const std::vector<std::size_t>& map) {
  ComplexMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(map[r], map[c]) = m(r, c);
  return out;
}

}  // namespace

void check_shape(const ManyBodyState& rho) {
  if (rho.n < 2 || rho.n > kMaxQubits) {
    throw InvalidArgument("many-body state: n must be in [2, " + std::to_string(kMaxQubits) +
                          "] (got " + std::to_string(rho.n) + ")");
  }
  if (rho.m.dim() != (std::size_t{1} << rho.n)) {
    throw InvalidArgument("many-body state: matrix dimension does not match 2^n");
  }
}

ComplexMatrix permutation_unitary(int n, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != n) {
    throw InvalidArgument("permutation_unitary: permutation length must equal n");
  }
  const auto map = index_map(n, perm);
  ComplexMatrix u(map.size());
  for (std::size_t x = 0; x < map.size(); ++x) u(map[x], x) = 1.0;
  return u;
}

ManyBodyState twirl_symmetrize(const ManyBodyState& rho) {
  check_shape(rho);
  std::vector<int> perm(static_cast<std::size_t>(rho.n));
  std::iota(perm.begin(), perm.end(), 0);
  ComplexMatrix sum(rho.m.dim());
  int count = 0;
  do {
    sum += permuted(rho.m, index_map(rho.n, perm));
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  sum *= 1.0 / count;
  return {rho.n, std::move(sum)};
}

DensityMatrix reduce_pair(const ManyBodyState& rho, int i, int j) {
  check_shape(rho);
  if (i < 1 || i > rho.n || j < 1 || j > rho.n || i == j) {
    throw InvalidArgument("reduce_pair: need distinct qubit indices in [1, " +
                          std::to_string(rho.n) + "] (got " + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  }
  const int n = rho.n;
  const std::size_t dim = rho.m.dim();
  const std::size_t mask_i = std::size_t{1} << (n - i);
  const std::size_t mask_j = std::size_t{1} << (n - j);
  auto pair_index = [&](std::size_t x) {
    return ((x & mask_i) ? 2U : 0U) + ((x & mask_j) ? 1U : 0U);
  };
  ComplexMatrix out(4);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      // Only entries whose traced-out qubits agree contribute.
      if ((x & ~(mask_i | mask_j)) != (y & ~(mask_i | mask_j))) continue;
      out(pair_index(x), pair_index(y)) += rho.m(x, y);
    }
  return {std::move(out)};
}

double permutation_asymmetry(const ManyBodyState& rho) {
  check_shape(rho);
  double worst = 0.0;
  for (int k = 0; k + 1 < rho.n; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(rho.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[k], perm[k + 1]);
    worst = std::max(worst, max_abs_diff(rho.m, permuted(rho.m, index_map(rho.n, perm))));
  }
  return worst;
}

MomentSet moments_of(const ManyBodyState& rho) {
  const double asym = permutation_asymmetry(rho);
  if (asym > kSymmetryTol) {
    throw SymmetryViolation("moments_of: state is not permutation symmetric (defect " +
                                std::to_string(asym) + ")",
                            asym);
  }
  const ComplexMatrix pair = reduce_pair(rho, 1, 2).m;
  constexpr std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
  MomentSet ms;
  for (std::size_t a = 0; a < 3; ++a) {
    ms.s[a] = (pair * pauli2(axes[a], Pauli::I)).trace().real();
    for (std::size_t b = 0; b < 3; ++b)
      ms.t[a][b] = (pair * pauli2(axes[a], axes[b])).trace().real();
  }
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) {
      const double avg = 0.5 * (ms.t[a][b] + ms.t[b][a]);
      ms.t[a][b] = ms.t[b][a] = avg;
    }
  return ms;
}

BlochState pair_from_moments(const MomentSet& ms) {
  BlochState b;
  b.family = FamilyTag::P23;
  b.sx = ms.s[0];
  b.sy = ms.s[1];
  b.sz = ms.s[2];
  b.c1 = ms.t[0][0];
  b.c2 = ms.t[1][1];
  b.c3 = ms.t[2][2];
  b.mix_a = ms.t[1][2];
  b.mix_b = ms.t[0][2];
  b.mix_c = ms.t[0][1];
  const ValidityReport v = validity(b);
  if (!v.valid) {
    throw InvalidState("pair_from_moments: moments are not realisable as a pair state (min "
                       "eigenvalue " + std::to_string(v.min_eigenvalue) + ")");
  }
  return b;
}

ManyBodyState random_state(int n, std::uint64_t seed) {
  if (n < 2 || n > kMaxQubits) {
    throw InvalidArgument("random_state: n must be in [2, " + std::to_string(kMaxQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n;
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss;
  ComplexMatrix a(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) a(r, c) = cplx(gauss(engine), gauss(engine));
  ComplexMatrix m = a * a.adjoint();
  m *= 1.0 / m.trace().real();
  return {n, std::move(m)};
}

}  // namespace spinpair
