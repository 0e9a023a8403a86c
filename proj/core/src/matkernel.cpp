#include "spinpair/matkernel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "spinpair/error.hpp"

namespace spinpair {

namespace {

constexpr double kOffDiagonalTol = 1e-14;
constexpr int kMaxSweeps = 64;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

void check_hermitian(const ComplexMatrix& m, double tol, const char* op) {
  const double asym = hermitian_asymmetry(m);
  if (asym > tol) {
    throw NotHermitian(std::string(op) + ": input is not Hermitian (max |M - M^dagger| = " +
                           std::to_string(asym) + ")",
                       asym);
  }
}

// Rebuild V diag(f(lambda)) V^dagger.
template <typename F>
ComplexMatrix spectral_map(const HermitianEigen& eig, F&& f) {
  const std::size_t n = eig.vectors.dim();
  std::vector<cplx> fv(n);
  for (std::size_t k = 0; k < n; ++k) fv[k] = f(eig.spectrum.values[k]);
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      cplx sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += eig.vectors(r, k) * fv[k] * std::conj(eig.vectors(c, k));
      out(r, c) = sum;
    }
  return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw InvalidArgument("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                          " entries, got " + std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw InvalidArgument("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(*this);
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

cplx ComplexMatrix::trace() const noexcept {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) noexcept {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(cplx s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, cplx s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx a = lhs(r, k);
      if (a == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

cplx determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix lu = m;
  cplx det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (std::abs(lu(r, k)) > std::abs(lu(pivot, k))) pivot = r;
    if (lu(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(pivot, c));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const cplx f = lu(r, k) / lu(k, k);
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= f * lu(k, c);
    }
  }
  return det;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double hermitian_asymmetry(const ComplexMatrix& m) {
  double asym = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      asym = std::max(asym, std::abs(m(r, c) - std::conj(m(c, r))));
  return asym;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_diff(a * b, b * a);
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol) {
  check_hermitian(m, tol, "hermitian_eigen");
  const std::size_t n = m.dim();
  if (n == 0) throw InvalidArgument("hermitian_eigen: empty matrix");

  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = kOffDiagonalTol * std::max(1.0, a.frobenius_norm());
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        // Phase the (p,q) entry real, then apply a real Jacobi rotation.
        const cplx phase = std::conj(a(p, q)) / r;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double cs = 1.0 / std::hypot(t, 1.0);
        const double sn = t * cs;
        const cplx g_pp = cs, g_pq = sn, g_qp = -sn * phase, g_qq = cs * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (off_diagonal_norm(a) >= threshold) {
    throw NumericalFailure("hermitian_eigen: Jacobi sweeps did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  HermitianEigen out{RealSpectrum{std::vector<double>(n)}, ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.spectrum.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

RealSpectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol) {
  return hermitian_eigen(m, tol).spectrum;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double tol) {
  const HermitianEigen eig = hermitian_eigen(m, std::max(tol, kHermitianTol));
  const double lowest = eig.spectrum.min();
  if (lowest < -tol) {
    throw NotPositive("hermitian_sqrt: matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(lowest) + ")",
                      lowest);
  }
  return spectral_map(eig, [](double x) { return cplx(std::sqrt(std::max(x, 0.0))); });
}

ComplexMatrix hermitian_exp(const ComplexMatrix& m, double scale) {
  const HermitianEigen eig = hermitian_eigen(m);
  return spectral_map(eig, [scale](double x) { return cplx(std::exp(scale * x)); });
}

ComplexMatrix unitary_propagator(const ComplexMatrix& h, double t) {
  const HermitianEigen eig = hermitian_eigen(h);
  return spectral_map(eig, [t](double x) { return std::polar(1.0, -x * t); });
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const cplx aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix kron2(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw InvalidArgument("kron2: both factors must be 2x2 (got " + std::to_string(a.dim()) +
                          " and " + std::to_string(b.dim()) + ")");
  }
  return kron(a, b);
}

RealSpectrum product_spectrum(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_dim(a, b, "product_spectrum");
  const double b_min = hermitian_eigenvalues(b, std::max(tol, kHermitianTol)).min();
  if (b_min < -tol) {
    throw NotPositive("product_spectrum: second factor is not positive semidefinite (min "
                      "eigenvalue " + std::to_string(b_min) + ")",
                      b_min);
  }
  const ComplexMatrix root = hermitian_sqrt(a, tol);
  RealSpectrum s = hermitian_eigenvalues(root * b * root, 1e-9);
  for (auto& x : s.values) x = std::max(x, 0.0);
  return s;
}

const ComplexMatrix& pauli(Pauli p) {
  static const std::array<ComplexMatrix, 4> table{
      ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
      ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
      ComplexMatrix{{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}},
      ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
  };
  return table[static_cast<std::size_t>(p)];
}

const ComplexMatrix& pauli2(Pauli a, Pauli b) {
  static const std::array<ComplexMatrix, 16> table = [] {
    std::array<ComplexMatrix, 16> t;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        t[i * 4 + j] = kron(pauli(static_cast<Pauli>(i)), pauli(static_cast<Pauli>(j)));
    return t;
  }();
  return table[static_cast<std::size_t>(a) * 4 + static_cast<std::size_t>(b)];
}

}  // namespace spinpair
