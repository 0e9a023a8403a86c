#pragma once

// Test-side reference implementations. None of these call into the library's
// numerical kernels; they exist so library results can be checked against an
// independent route.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Dense row-major square matrix, deliberately separate from the library type.
struct Mat {
  std::size_t n = 0;
  std::vector<cplx> a;

  explicit Mat(std::size_t dim = 0) : n(dim), a(dim * dim) {}
  cplx& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  cplx operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }
  static Mat eye(std::size_t dim);
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat scaled(const Mat& x, cplx s);
Mat adjoint(const Mat& x);
Mat kron(const Mat& x, const Mat& y);
double max_abs_diff(const Mat& x, const Mat& y);
cplx trace(const Mat& x);

/// sigma_0..sigma_3 written out by hand.
const Mat& sigma(int k);

/// Coefficients c_0..c_n of det(x I - M) = sum c_k x^k (Faddeev-LeVerrier).
std::vector<cplx> char_poly(const Mat& m);

/// All roots of a monic polynomial (coefficients low to high) by
/// Durand-Kerner iteration followed by Newton polishing.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs);

/// Eigenvalues of an arbitrary square matrix via char_poly + poly_roots,
/// real parts sorted non-increasing.
std::vector<double> real_spectrum(const Mat& m);

/// exp(M) by scaling and squaring of a truncated Taylor series.
Mat expm(const Mat& m);

/// Determinant by cofactor expansion (n <= 4) for principal-minor checks.
cplx det_cofactor(const Mat& m);

/// PSD by Sylvester's criterion over all 2^n - 1 principal minors.
bool psd_by_minors(const Mat& m, double tol);

/// Wootters concurrence from R = rho * flip(rho), its spectrum computed by
/// real_spectrum.
double concurrence(const Mat& rho);

/// Binary entropy map of concurrence, written independently.
double eof(double c);

/// max(0, (3p - 1) / 2)
double werner_concurrence(double p);

/// Werner state p |Psi-><Psi-| + (1 - p) I/4.
Mat werner(double p);

/// Random Hermitian with Gaussian entries, and a random full-rank state.
Mat random_hermitian(std::size_t n, std::mt19937_64& rng);
Mat random_density(std::size_t n, std::mt19937_64& rng);

/// Reduced state of qubits (i, j) (one-based, qubit 1 most significant)
/// by explicit index reshaping.
Mat partial_trace_keep(const Mat& rho, int n, int i, int j);

/// Strict positive definiteness by Cholesky. Used by the brute-force
/// sampler, where the semidefinite boundary has measure zero.
bool cholesky_ok(const Mat& m);

/// P23-family matrix assembled term by term from sigma products:
/// p = (sx, sy, sz, c1, c2, c3, gx, gy, gz).
Mat p23_by_hand(const std::array<double, 9>& p);

/// Plain rejection from [-1, 1]^9 against cholesky_ok(p23_by_hand(.)).
std::vector<std::array<double, 9>> p23_cube_rejection(std::size_t count, std::uint64_t seed);

}  // namespace oracle
