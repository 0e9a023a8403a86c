#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "bridge.hpp"
#include "oracles.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/error.hpp"
#include "spinpair/manybody.hpp"

using namespace spinpair;

namespace {

ManyBodyState ghz(int n) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim);
  m(0, 0) = m(0, dim - 1) = m(dim - 1, 0) = m(dim - 1, dim - 1) = 0.5;
  return {n, m};
}

ComplexMatrix diag00_11() {
  const std::array<double, 4> d{0.5, 0, 0, 0.5};
  return ComplexMatrix::diagonal(d);
}

}  // namespace

TEST(Twirl, TwoQubitAverage) {
  ComplexMatrix m(4);
  m(1, 1) = 1.0;
  const auto t = twirl_symmetrize({2, m});
  const std::array<double, 4> d{0, 0.5, 0.5, 0};
  EXPECT_LT(max_abs_diff(t.m, ComplexMatrix::diagonal(d)), 1e-16);
}

TEST(Twirl, SymmetricFixedPoint) {
  const ManyBodyState g = ghz(4);
  EXPECT_LT(max_abs_diff(twirl_symmetrize(g).m, g.m), 1e-12);
  const auto t = twirl_symmetrize(random_state(3, 5));
  EXPECT_LT(max_abs_diff(twirl_symmetrize(t).m, t.m), 1e-12);
}

TEST(Twirl, CommutesWithEveryTransposition) {
  const auto t = twirl_symmetrize(random_state(4, 6));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<int> perm(4);
      std::iota(perm.begin(), perm.end(), 0);
      std::swap(perm[a], perm[b]);
      EXPECT_LT(commutator_norm(t.m, permutation_unitary(4, perm)), 1e-12);
    }
  EXPECT_LT(permutation_asymmetry(t), 1e-12);
}

TEST(Twirl, RejectsTooManyQubits) {
  EXPECT_THROW(twirl_symmetrize({6, ComplexMatrix(64)}), InvalidArgument);
  EXPECT_THROW(random_state(6, 1), InvalidArgument);
  EXPECT_THROW(twirl_symmetrize({3, ComplexMatrix(4)}), InvalidArgument);
}

TEST(PermutationUnitary, TwoQubitSwapIsP23) {
  EXPECT_EQ(permutation_unitary(2, {1, 0}), perm_matrix(FamilyTag::P23));
}

TEST(ReducePair, TwoQubitIdentity) {
  const auto r = random_state(2, 7);
  EXPECT_EQ(reduce_pair(r, 1, 2).m, r.m);
}

TEST(ReducePair, GhzAnyPair) {
  const ManyBodyState g = ghz(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) EXPECT_LT(max_abs_diff(reduce_pair(g, i, j).m, diag00_11()), 1e-16);
}

TEST(ReducePair, MatchesReshapeOracle) {
  for (int n = 2; n <= 5; ++n) {
    const auto r = random_state(n, 8 + n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const auto ref = oracle::partial_trace_keep(oracle::from_lib(r.m), n, i, j);
        EXPECT_LT(oracle::max_abs_diff(oracle::from_lib(reduce_pair(r, i, j).m), ref), 1e-15);
      }
  }
}

TEST(ReducePair, SymmetricStateIndependentOfPair) {
  const auto t = twirl_symmetrize(random_state(4, 13));
  const ComplexMatrix ref = reduce_pair(t, 1, 2).m;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) EXPECT_LT(max_abs_diff(reduce_pair(t, i, j).m, ref), 1e-12);
}

TEST(ReducePair, TraceAndPositivity) {
  for (int n = 2; n <= 5; ++n) {
    const auto t = twirl_symmetrize(random_state(n, 20 + n));
    const ComplexMatrix r = reduce_pair(t, 1, 2).m;
    EXPECT_NEAR(r.trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(r).min(), -1e-10);
  }
}

TEST(ReducePair, IndexErrors) {
  const auto r = random_state(3, 1);
  EXPECT_THROW(reduce_pair(r, 1, 1), InvalidArgument);
  EXPECT_THROW(reduce_pair(r, 0, 2), InvalidArgument);
  EXPECT_THROW(reduce_pair(r, 1, 4), InvalidArgument);
}

TEST(Moments, MaximallyMixed) {
  ComplexMatrix m = ComplexMatrix::identity(8);
  m *= 0.125;
  const MomentSet ms = moments_of({3, m});
  for (double v : ms.s) EXPECT_EQ(v, 0.0);
  for (const auto& row : ms.t)
    for (double v : row) EXPECT_EQ(v, 0.0);
}

TEST(Moments, Ghz) {
  const MomentSet ms = moments_of(ghz(4));
  for (double v : ms.s) EXPECT_NEAR(v, 0.0, 1e-16);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      EXPECT_NEAR(ms.t[a][b], a == 2 && b == 2 ? 1.0 : 0.0, 1e-16);
  const BlochState b = pair_from_moments(ms);
  EXPECT_LT(max_abs_diff(to_matrix(b).m, diag00_11()), 1e-16);
}

TEST(Moments, CorrelationMatrixExactlySymmetric) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MomentSet ms = moments_of(twirl_symmetrize(random_state(3, seed)));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(ms.t[a][b], ms.t[b][a]);
  }
}

TEST(Moments, RejectsAsymmetricState) {
  EXPECT_THROW(moments_of(random_state(3, 4)), SymmetryViolation);
}

TEST(PairFromMoments, ZeroIsMaximallyMixed) {
  const BlochState b = pair_from_moments(MomentSet{});
  EXPECT_EQ(b.family, FamilyTag::P23);
  EXPECT_LT(max_abs_diff(to_matrix(b).m, 0.25 * ComplexMatrix::identity(4)), 1e-16);
}

TEST(PairFromMoments, RejectsUnrealisable) {
  MomentSet ms;
  ms.t[0][0] = ms.t[1][1] = ms.t[2][2] = 1.0;
  EXPECT_THROW(pair_from_moments(ms), InvalidState);
}

TEST(PairFromMoments, ReproducesReducedState) {
  for (int n : {3, 4, 5})
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto t = twirl_symmetrize(random_state(n, 100 + seed));
      const ComplexMatrix reduced = reduce_pair(t, 1, 2).m;
      EXPECT_LT(max_abs_diff(to_matrix(pair_from_moments(moments_of(t))).m, reduced), 1e-10);
      EXPECT_LT(symmetry_defect(reduced, FamilyTag::P23), 1e-12);
    }
}

TEST(PairFromMoments, ClosedFormMatchesOracleOnReducedPairs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto t = twirl_symmetrize(random_state(4, 200 + seed));
    const DensityMatrix reduced = reduce_pair(t, 2, 3);
    const double cf = closed_form(from_matrix(reduced, FamilyTag::P23)).concurrence;
    EXPECT_NEAR(cf, wootters_oracle(reduced).concurrence, 1e-9);
  }
}

TEST(Dirac, ExchangeOperatorIsP23Exactly) {
  ComplexMatrix dirac = ComplexMatrix::identity(4);
  dirac += pauli2(Pauli::X, Pauli::X);
  dirac += pauli2(Pauli::Y, Pauli::Y);
  dirac += pauli2(Pauli::Z, Pauli::Z);
  dirac *= 0.5;
  EXPECT_EQ(dirac, perm_matrix(FamilyTag::P23));
}
