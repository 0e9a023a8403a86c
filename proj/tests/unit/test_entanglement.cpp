#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bridge.hpp"
#include "oracles.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/separability.hpp"
#include "spinpair/error.hpp"
#include "spinpair/hamiltonians.hpp"

using namespace spinpair;

namespace {

const BlochState kPhiPlus{FamilyTag::P23, 0, 0, 0, 1, -1, 1, 0, 0, 0};

DensityMatrix basis_projector(std::size_t i) {
  ComplexMatrix m(4);
  m(i, i) = 1.0;
  return {m};
}

BlochState mixed_slice_point(double c1) {
  return {FamilyTag::P23, 0.15, 0, 0, c1, -c1 + 0.1, 0.7, 0.16, 0.1, 0.04};
}

}  // namespace

TEST(SpinFlip, Examples) {
  const DensityMatrix q{0.25 * ComplexMatrix::identity(4)};
  EXPECT_LT(max_abs_diff(spin_flip(q).m, q.m), 1e-16);
  EXPECT_LT(max_abs_diff(spin_flip(basis_projector(0)).m, basis_projector(3).m), 1e-16);
  const std::array<BlochState, 4> bells{
      BlochState{FamilyTag::P23, 0, 0, 0, 1, -1, 1, 0, 0, 0},
      BlochState{FamilyTag::P23, 0, 0, 0, -1, 1, 1, 0, 0, 0},
      BlochState{FamilyTag::P23, 0, 0, 0, 1, 1, -1, 0, 0, 0},
      BlochState{FamilyTag::P23, 0, 0, 0, -1, -1, -1, 0, 0, 0}};
  for (const auto& b : bells) {
    const DensityMatrix rho = to_matrix(b);
    EXPECT_LT(max_abs_diff(spin_flip(rho).m, rho.m), 1e-16);
  }
}

TEST(Oracle, PhiPlus) {
  const auto r = wootters_oracle(to_matrix(kPhiPlus));
  EXPECT_NEAR(r.lambdas[0], 1.0, 1e-14);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(r.lambdas[k], 0.0, 1e-14);
  EXPECT_NEAR(r.concurrence, 1.0, 1e-7);
  EXPECT_NEAR(r.eof, 1.0, 1e-6);
  EXPECT_EQ(r.method, Method::Oracle);
}

TEST(Oracle, MaximallyMixed) {
  const auto r = wootters_oracle({0.25 * ComplexMatrix::identity(4)});
  for (double l : r.lambdas) EXPECT_NEAR(l, 1.0 / 16, 1e-15);
  EXPECT_EQ(r.concurrence, 0.0);
  EXPECT_EQ(r.eof, 0.0);
}

TEST(Oracle, WernerFamily) {
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const auto r = wootters_oracle({oracle::to_lib(oracle::werner(p))});
    EXPECT_NEAR(r.concurrence, oracle::werner_concurrence(p), 1e-8) << "p = " << p;
  }
  EXPECT_NEAR(wootters_oracle({oracle::to_lib(oracle::werner(0.8))}).concurrence, 0.7, 1e-12);
}

TEST(Oracle, MatchesCharPolyOnGeneralStates) {
  // Gibbs states of unrestricted Hamiltonians lie outside every family.
  // A mild beta keeps R's spectrum well separated, which the char-poly
  // oracle needs.
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 200; ++trial) {
    GeneralHamiltonian g;
    for (auto& v : g.field1) v = u(rng);
    for (auto& v : g.field2) v = u(rng);
    for (auto& row : g.coupling)
      for (auto& v : row) v = u(rng);
    const DensityMatrix rho = gibbs(build_general(g), 0.5);
    EXPECT_NEAR(wootters_oracle(rho).concurrence, oracle::concurrence(oracle::from_lib(rho.m)),
                1e-7);
  }
}

TEST(Oracle, LambdasSumToTraceOfR) {
  for (FamilyTag f : kAllFamilies)
    for (const BlochState& b : sample_domain(f, 72, 200)) {
      const DensityMatrix rho = to_matrix(b);
      const auto r = wootters_oracle(rho);
      const double tr = (rho.m * spin_flip(rho).m).trace().real();
      EXPECT_NEAR(r.lambdas[0] + r.lambdas[1] + r.lambdas[2] + r.lambdas[3], tr, 1e-12);
    }
}

TEST(Oracle, RejectsNonPositive) {
  const BlochState bad{FamilyTag::P23, 0, 0, 0, 1, 1, 1, 0, 0, 0};
  EXPECT_THROW(wootters_oracle(to_matrix(bad)), NotPositive);
}

TEST(Concurrence, FromLambdasSortsAndClamps) {
  EXPECT_DOUBLE_EQ(concurrence_from_lambdas({0.0, 0.25, 0, 0}), 0.5);
  EXPECT_EQ(concurrence_from_lambdas({0.1, 0.1, 0.1, 0.1}), 0.0);
  EXPECT_DOUBLE_EQ(concurrence_from_lambdas({1.0, -1e-18, 0, 0}), 1.0);
}

TEST(Eof, Endpoints) {
  EXPECT_EQ(eof_from_concurrence(0.0), 0.0);
  EXPECT_NEAR(eof_from_concurrence(1.0), 1.0, 1e-15);
  EXPECT_NEAR(eof_from_concurrence(1.0 + 5e-13), 1.0, 1e-15);
  EXPECT_THROW(eof_from_concurrence(1.1), InvalidArgument);
  EXPECT_THROW(eof_from_concurrence(-1e-6), InvalidArgument);
}

TEST(Eof, HalfFixture) {
  EXPECT_NEAR(eof_from_concurrence(0.5), oracle::eof(0.5), 1e-15);
  EXPECT_NEAR(eof_from_concurrence(0.5), 0.35457890266527003, 1e-15);
}

TEST(Eof, MonotoneOnGrid) {
  double prev = -1.0;
  for (int k = 0; k <= 1000; ++k) {
    const double v = eof_from_concurrence(k / 1000.0);
    EXPECT_GE(v, prev);
    EXPECT_NEAR(v, oracle::eof(k / 1000.0), 1e-14);
    prev = v;
  }
}

TEST(QInvariants, ZeroState) {
  const auto q = q_invariants_symbolic(BlochState{});
  EXPECT_DOUBLE_EQ(q.alpha1, 1.0);
  EXPECT_DOUBLE_EQ(q.alpha2, 1.0);
  EXPECT_DOUBLE_EQ(q.alpha3, 1.0);
  EXPECT_DOUBLE_EQ(q.trace, 3.0 / 16);
  EXPECT_DOUBLE_EQ(q.minor_sum, 3.0 / 256);
  EXPECT_DOUBLE_EQ(q.det, 1.0 / 4096);
}

TEST(QInvariants, BellDiagonalTrace) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int k = 0; k < 100; ++k) {
    const BlochState b{FamilyTag::P23, 0, 0, 0, u(rng), u(rng), u(rng), 0, 0, 0};
    const auto q = q_invariants_symbolic(b);
    EXPECT_NEAR(q.trace, (q.alpha1 * q.alpha1 + q.alpha2 * q.alpha2 + q.alpha3 * q.alpha3) / 16,
                1e-15);
  }
}

TEST(QInvariants, SymbolicMatchesNumericBlock) {
  for (const BlochState& b : sample_domain(FamilyTag::P23, 74, 2000)) {
    const auto sym = q_invariants_symbolic(b);
    const auto num = q_invariants_numeric(reduced_r(b).q);
    EXPECT_NEAR(sym.trace, num.trace, 1e-10);
    EXPECT_NEAR(sym.minor_sum, num.minor_sum, 1e-10);
    EXPECT_NEAR(sym.det, num.det, 1e-10);
    EXPECT_GE(sym.det, -1e-15);
  }
}

TEST(QInvariants, FactoredMatchesNumeric) {
  for (FamilyTag f : kAllFamilies)
    for (const BlochState& b : sample_domain(f, 75, 500)) {
      const ReducedR r = reduced_r(b);
      const auto fac = q_invariants_factored(r.a, r.b);
      const auto num = q_invariants_numeric(r.q);
      EXPECT_NEAR(fac.trace, num.trace, 1e-13);
      EXPECT_NEAR(fac.minor_sum, num.minor_sum, 1e-13);
      EXPECT_NEAR(fac.det, num.det, 1e-13);
      EXPECT_LT(r.residual, 1e-12);
    }
}

TEST(QInvariants, SymbolicRejectsOtherFamilies) {
  BlochState b;
  b.family = FamilyTag::P1bar4bar;
  EXPECT_THROW(q_invariants_symbolic(b), InvalidArgument);
}

TEST(TrigRoots, VietaRelations) {
  for (const BlochState& b : sample_domain(FamilyTag::P23, 76, 2000)) {
    const auto q = q_invariants_symbolic(b);
    const auto x = trigonometric_roots(q.trace, q.minor_sum, q.det);
    EXPECT_NEAR(x[0] + x[1] + x[2], q.trace, 1e-12);
    EXPECT_NEAR(x[0] * x[1] * x[2], q.det, 1e-12);
    EXPECT_NEAR(x[0] * x[1] + x[1] * x[2] + x[0] * x[2], q.minor_sum, 1e-12);
  }
}

TEST(TrigRoots, KnownCubic) {
  // (x - 1)(x - 2)(x - 3)
  auto x = trigonometric_roots(6, 11, 6);
  std::sort(x.begin(), x.end());
  EXPECT_NEAR(x[0], 1, 1e-13);
  EXPECT_NEAR(x[1], 2, 1e-13);
  EXPECT_NEAR(x[2], 3, 1e-13);
}

TEST(TrigRoots, TripleRootShortcut) {
  const auto x = trigonometric_roots(3.0 / 16, 3.0 / 256, 1.0 / 4096);
  for (double v : x) EXPECT_DOUBLE_EQ(v, 1.0 / 16);
}

TEST(TrigRoots, OvershootIsAnError) {
  // x^3 - 3x^2 + 2.9x - det has three real roots only for det in a narrow
  // window around 0.9; well outside it the arccos argument leaves [-1, 1].
  EXPECT_THROW(trigonometric_roots(3.0, 2.9, 5.0), NumericalFailure);
}

TEST(TrigRoots, NearTripleRootToleratesRounding) {
  // Bell-diagonal c1 = c2 = u, c3 = -0.5 on a 301-point grid over
  // [-0.75, 0]: near u = -0.5 three Bell weights coincide and rounding
  // pushes the arccos argument just past -1.
  const AxisRange grid{-0.75, 0.0, 301};
  BlochState b;
  b.c3 = -0.5;
  for (int i = 0; i < grid.steps; ++i) {
    b.c1 = b.c2 = grid.at(i);
    const auto q = q_invariants_symbolic(b);
    EXPECT_NO_THROW(trigonometric_roots(q.trace, q.minor_sum, q.det)) << b.c1;
    EXPECT_NEAR(closed_form(b).concurrence, wootters_oracle(to_matrix(b)).concurrence, 1e-9);
  }
}

TEST(RefineRoots, RecoversTinyRoot) {
  // Roots 0.5, 0.25, 1e-17: m and det carry the small root exactly.
  const double a = 0.5, b = 0.25, c = 1e-17;
  const auto x = refine_small_roots({a, b, 0.0}, a * b + b * c + a * c, a * b * c);
  EXPECT_DOUBLE_EQ(x[0], a);
  EXPECT_NEAR(x[1], b, 1e-16);
  EXPECT_NEAR(x[2], c, 1e-30);
}

TEST(ClosedForm, PhiPlus) {
  const auto r = closed_form(kPhiPlus);
  EXPECT_NEAR(r.lambdas[0], 1.0, 1e-15);
  for (std::size_t k = 1; k < 4; ++k) EXPECT_NEAR(r.lambdas[k], 0.0, 1e-15);
  EXPECT_NEAR(r.concurrence, 1.0, 1e-12);
  EXPECT_EQ(r.method, Method::ClosedForm);
}

TEST(ClosedForm, ScalarEigenvalue) {
  for (const BlochState& b : sample_domain(FamilyTag::P23, 77, 200)) {
    const double l4 = (1 - b.c1 - b.c2 - b.c3) * (1 - b.c1 - b.c2 - b.c3) / 16;
    EXPECT_NEAR(reduced_r(b).scalar, l4, 1e-15);
  }
}

TEST(ClosedForm, MixedSlicePointEntangledAndDecreasing) {
  const double c = closed_form(mixed_slice_point(-0.3)).concurrence;
  EXPECT_GT(c, 0.0);
  EXPECT_LT(closed_form(mixed_slice_point(-0.29)).concurrence, c);
  EXPECT_GT(closed_form(mixed_slice_point(-0.31)).concurrence, c);
}

TEST(ClosedForm, AgreesWithOracleEveryFamily) {
  for (FamilyTag f : kAllFamilies)
    for (const BlochState& b : sample_domain(f, 78, 1000)) {
      const auto cf = closed_form(b);
      const auto orc = wootters_oracle(to_matrix(b));
      for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(cf.lambdas[k], orc.lambdas[k], 1e-9);
      EXPECT_NEAR(cf.concurrence, orc.concurrence, 1e-9);
      EXPECT_NEAR(cf.eof, eof_from_concurrence(cf.concurrence), 1e-15);
    }
}

TEST(ClosedForm, BellDiagonalAnalytic) {
  // C = max(0, max_k alpha_k / 2 - 1) on the tetrahedron.
  std::mt19937_64 rng(79);
  std::uniform_real_distribution<double> u(-1, 1);
  int done = 0;
  while (done < 300) {
    const BlochState b{FamilyTag::P23, 0, 0, 0, u(rng), u(rng), u(rng), 0, 0, 0};
    if (!validity(b).valid) continue;
    const double a[4] = {1 - b.c1 - b.c2 - b.c3, 1 - b.c1 + b.c2 + b.c3, 1 + b.c1 - b.c2 + b.c3,
                         1 + b.c1 + b.c2 - b.c3};
    const double expect = std::max(0.0, *std::max_element(a, a + 4) / 2 - 1);
    EXPECT_NEAR(closed_form(b).concurrence, expect, 1e-9);
    ++done;
  }
}

TEST(ClosedForm, RejectsInvalidState) {
  EXPECT_THROW(closed_form({FamilyTag::P23, 0, 0, 0, 1, 1, 1, 0, 0, 0}), InvalidState);
}

TEST(Structure, DetROfSquaredDetRho) {
  for (FamilyTag f : kAllFamilies)
    for (const BlochState& b : sample_domain(f, 80, 500)) {
      const DensityMatrix rho = to_matrix(b);
      const cplx dr = determinant(rho.m * spin_flip(rho).m);
      const cplx d = determinant(rho.m);
      EXPECT_LT(std::abs(dr - d * d), 1e-10);
    }
}

TEST(Structure, ConcurrenceInvariantUnderReducingTransform) {
  // R's spectrum is unchanged when rho and its flip are rotated by the same
  // real orthogonal O, because O commutes with the spin flip up to sign.
  for (FamilyTag f : kAllFamilies) {
    const ComplexMatrix& o = reducing_transform(f);
    for (const BlochState& b : sample_domain(f, 81, 100)) {
      const DensityMatrix rho = to_matrix(b);
      const DensityMatrix rot{o.transpose() * rho.m * o};
      const DensityMatrix rot_flip{o.transpose() * spin_flip(rho).m * o};
      const auto s = product_spectrum(rot.m, rot_flip.m);
      const double c = concurrence_from_lambdas({s[0], s[1], s[2], s[3]});
      EXPECT_NEAR(c, wootters_oracle(rho).concurrence, 1e-9);
    }
  }
}
