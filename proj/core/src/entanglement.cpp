#include "spinpair/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "spinpair/error.hpp"

namespace spinpair {

namespace {

constexpr double kTripleRootTol = 1e-14;
constexpr double kArccosOvershoot = 1e-12;
constexpr double kConcurrenceRange = 1e-12;

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

EntanglementReport make_report(std::array<double, 4> lambdas, Method method) {
  for (double& x : lambdas) {
    if (x < -kPsdClamp) {
      throw NumericalFailure("negative eigenvalue of R below clamp: " + std::to_string(x));
    }
    x = std::max(x, 0.0);
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  EntanglementReport r;
  r.lambdas = lambdas;
  r.concurrence = concurrence_from_lambdas(lambdas);
  r.eof = eof_from_concurrence(r.concurrence);
  r.method = method;
  return r;
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  return m == Method::Oracle ? "oracle" : "closed_form";
}

DensityMatrix spin_flip(const DensityMatrix& rho) {
  const ComplexMatrix& v = pauli2(Pauli::Y, Pauli::Y);
  return {v * rho.m.conj() * v};
}

double concurrence_from_lambdas(std::array<double, 4> lambdas) {
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  std::array<double, 4> r{};
  for (std::size_t k = 0; k < 4; ++k) r[k] = std::sqrt(std::max(lambdas[k], 0.0));
  return std::max(0.0, r[0] - r[1] - r[2] - r[3]);
}

double eof_from_concurrence(double c) {
  if (!(c >= -kConcurrenceRange && c <= 1.0 + kConcurrenceRange)) {
    throw InvalidArgument("eof_from_concurrence: concurrence " + std::to_string(c) +
                          " outside [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  const double root = std::sqrt(1.0 - c * c);
  return binary_entropy((1.0 + root) / 2.0);
}

EntanglementReport wootters_oracle(const DensityMatrix& rho) {
  if (rho.m.dim() != 4) throw InvalidArgument("wootters_oracle: expected a 4x4 matrix");
  const RealSpectrum s = product_spectrum(rho.m, spin_flip(rho).m);
  return make_report({s[0], s[1], s[2], s[3]}, Method::Oracle);
}

QInvariants q_invariants_symbolic(const BlochState& b) {
  if (b.family != FamilyTag::P23) {
    throw InvalidArgument("q_invariants_symbolic: defined for P23 states only (got " +
                          std::string(to_string(b.family)) + ")");
  }
  const double sx = b.sx, sy = b.sy, sz = b.sz;
  const double gx = b.mix_a, gy = b.mix_b, gz = b.mix_c;
  const double a1 = 1 - b.c1 + b.c2 + b.c3;
  const double a2 = 1 + b.c1 - b.c2 + b.c3;
  const double a3 = 1 + b.c1 + b.c2 - b.c3;

  const double gx2 = gx * gx, gy2 = gy * gy, gz2 = gz * gz;
  const double sx2 = sx * sx, sy2 = sy * sy, sz2 = sz * sz;
  const double g2 = gx2 + gy2 + gz2, s2 = sx2 + sy2 + sz2;

  QInvariants q;
  q.alpha1 = a1;
  q.alpha2 = a2;
  q.alpha3 = a3;
  q.trace = (a1 * a1 + a2 * a2 + a3 * a3 + 8 * (g2 - s2)) / 16.0;

  const double m = a1 * a1 * a2 * a2 + a2 * a2 * a3 * a3 + a1 * a1 * a3 * a3 +
                   8 * (a1 * a1 * (gx2 - sx2) + a2 * a2 * (gy2 - sy2) + a3 * a3 * (gz2 - sz2) -
                        a1 * a2 * (gz2 + sz2) - a2 * a3 * (gx2 + sx2) - a1 * a3 * (gy2 + sy2)) +
                   16 * (g2 * g2 + s2 * s2) +
                   32 * (gx * gy * gz * (a1 + a2 + a3) + gx * sy * sz * (-a1 + a2 + a3) +
                         gy * sx * sz * (a1 - a2 + a3) + gz * sx * sy * (a1 + a2 - a3) -
                         sx2 * (-gx2 + gy2 + gz2) - sy2 * (gx2 - gy2 + gz2) -
                         sz2 * (gx2 + gy2 - gz2)) -
                   128 * (gx * gy * sx * sy + gy * gz * sy * sz + gx * gz * sx * sz);
  q.minor_sum = m / 256.0;

  const double r = a1 * a2 * a3 - 4 * (a1 * (gx2 + sx2) + a2 * (gy2 + sy2) + a3 * (gz2 + sz2)) +
                   16 * (gx * sy * sz + gy * sx * sz + gz * sx * sy - gx * gy * gz);
  q.det = r * r / 4096.0;
  return q;
}

ReducedR reduced_r(const BlochState& b) {
  const DensityMatrix rho = to_matrix(b);
  const ComplexMatrix& u = reducing_transform_unscaled(b.family);
  const ComplexMatrix ut = u.transpose();
  const ComplexMatrix rotated = 0.5 * (ut * rho.m * u);
  const ComplexMatrix flipped = 0.5 * (ut * spin_flip(rho).m * u);
  const ComplexMatrix r = rotated * flipped;

  ReducedR out{ComplexMatrix(3), ComplexMatrix(3), ComplexMatrix(3), r(3, 3).real(), 0.0};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out.q(i, j) = r(i, j);
      out.a(i, j) = rotated(i, j);
      out.b(i, j) = flipped(i, j);
    }
    out.residual = std::max({out.residual, std::abs(r(i, 3)), std::abs(r(3, i))});
  }
  return out;
}

QInvariants q_invariants_numeric(const ComplexMatrix& q) {
  if (q.dim() != 3) throw InvalidArgument("q_invariants_numeric: expected a 3x3 block");
  QInvariants out;
  out.trace = q.trace().real();
  out.minor_sum = (q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0) + q(0, 0) * q(2, 2) -
                   q(0, 2) * q(2, 0) + q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1))
                      .real();
  out.det = (q(0, 0) * (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) -
             q(0, 1) * (q(1, 0) * q(2, 2) - q(1, 2) * q(2, 0)) +
             q(0, 2) * (q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0)))
                .real();
  return out;
}

namespace {

cplx det3(const ComplexMatrix& q) {
  return q(0, 0) * (q(1, 1) * q(2, 2) - q(1, 2) * q(2, 1)) -
         q(0, 1) * (q(1, 0) * q(2, 2) - q(1, 2) * q(2, 0)) +
         q(0, 2) * (q(1, 0) * q(2, 1) - q(1, 1) * q(2, 0));
}

// Second compound: 2x2 minors indexed by row pair and column pair.
std::array<std::array<cplx, 3>, 3> compound2(const ComplexMatrix& m) {
  constexpr std::array<std::array<std::size_t, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  std::array<std::array<cplx, 3>, 3> c{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t k = 0; k < 3; ++k) {
      const auto [i, j] = pairs[r];
      const auto [p, q] = pairs[k];
      c[r][k] = m(i, p) * m(j, q) - m(i, q) * m(j, p);
    }
  return c;
}

}  // namespace

QInvariants q_invariants_factored(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 3 || b.dim() != 3) {
    throw InvalidArgument("q_invariants_factored: expected 3x3 factors");
  }
  QInvariants out;
  cplx tr = 0.0, m = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) tr += a(i, j) * b(j, i);
  const auto ca = compound2(a), cb = compound2(b);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m += ca[i][j] * cb[j][i];
  out.trace = tr.real();
  out.minor_sum = m.real();
  out.det = (det3(a) * det3(b)).real();
  return out;
}

std::array<double, 3> refine_small_roots(std::array<double, 3> roots, double minor_sum,
                                         double det) {
  std::sort(roots.begin(), roots.end(), std::greater<>());
  const double x1 = roots[0];
  if (!(x1 > 0.0)) return roots;
  const double prod23 = det / x1;
  const double sum23 = (minor_sum - prod23) / x1;
  const double disc = std::max(0.0, sum23 * sum23 - 4.0 * prod23);
  const double x2 = 0.5 * (sum23 + std::sqrt(disc));
  const double x3 = x2 > 0.0 ? prod23 / x2 : 0.0;
  // Inconsistent invariants (x2 above x1) keep the trigonometric roots.
  if (!(x2 <= x1) || !std::isfinite(x3)) return roots;
  return {x1, x2, x3};
}

std::array<double, 3> trigonometric_roots(double trace, double minor_sum, double det) {
  const double p = trace * trace - 3.0 * minor_sum;
  if (p <= kTripleRootTol) {
    const double x = trace / 3.0;
    return {x, x, x};
  }
  double arg = (2.0 * trace * trace * trace - 9.0 * minor_sum * trace + 27.0 * det) /
               (2.0 * p * std::sqrt(p));
  // Rounding in arg grows like (tr^2 / p)^{3/2} as the roots coalesce.
  const double spread = std::max(1.0, trace * trace / p);
  if (std::abs(arg) > 1.0 + kArccosOvershoot * spread * std::sqrt(spread)) {
    throw NumericalFailure("trigonometric_roots: arccos argument " + std::to_string(arg) +
                           " outside [-1, 1]; cubic has complex roots");
  }
  arg = std::clamp(arg, -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  const double amp = 2.0 / 3.0 * std::sqrt(p);
  std::array<double, 3> roots{};
  for (int k = 0; k < 3; ++k)
    roots[k] = trace / 3.0 + amp * std::cos(phi + 2.0 * std::numbers::pi / 3.0 * k);
  return roots;
}

EntanglementReport closed_form(const BlochState& b) {
  const ValidityReport v = validity(b);
  if (!v.valid) {
    throw InvalidState("closed_form: parameters are outside the physical domain (min "
                       "eigenvalue " + std::to_string(v.min_eigenvalue) + ")");
  }
  double scalar = 0.0;
  QInvariants inv;
  if (b.family == FamilyTag::P23) {
    const double a0 = 1 - b.c1 - b.c2 - b.c3;
    scalar = a0 * a0 / 16.0;
    inv = q_invariants_symbolic(b);
  } else {
    const ReducedR r = reduced_r(b);
    scalar = r.scalar;
    inv = q_invariants_factored(r.a, r.b);
  }
  const auto roots = refine_small_roots(trigonometric_roots(inv.trace, inv.minor_sum, inv.det),
                                        inv.minor_sum, inv.det);
  return make_report({roots[0], roots[1], roots[2], scalar}, Method::ClosedForm);
}

}  // namespace spinpair
