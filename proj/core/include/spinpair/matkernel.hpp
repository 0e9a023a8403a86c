#pragma once

// Small dense complex linear algebra for two-qubit (and up to five-qubit)
// density matrices. Everything here is a pure function on values.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spinpair {

using cplx = std::complex<double>;

/// Square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  /// Row-major nested initializer; every row must have `rows.size()` entries.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::span<const cplx> entries() const noexcept { return data_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * dim_ + c];
  }

  [[nodiscard]] ComplexMatrix adjoint() const;
  [[nodiscard]] ComplexMatrix transpose() const;
  [[nodiscard]] ComplexMatrix conj() const;
  [[nodiscard]] cplx trace() const noexcept;
  /// Largest entry modulus.
  [[nodiscard]] double max_abs() const noexcept;
  [[nodiscard]] double frobenius_norm() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, cplx s);

/// max |a_ij - b_ij|; dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |M - M^dagger| entry.
double hermitian_asymmetry(const ComplexMatrix& m);
/// max |AB - BA| entry.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);
/// LU with partial pivoting.
cplx determinant(const ComplexMatrix& m);

/// Real eigenvalues sorted non-increasing.
struct RealSpectrum {
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const noexcept { return values[i]; }
  [[nodiscard]] double min() const noexcept { return values.back(); }
  [[nodiscard]] double max() const noexcept { return values.front(); }
};

/// Eigenvalues and orthonormal eigenvectors (column k of `vectors` pairs
/// with `values[k]`), sorted non-increasing.
struct HermitianEigen {
  RealSpectrum spectrum;
  ComplexMatrix vectors;
};

inline constexpr double kHermitianTol = 1e-10;
/// Negative eigenvalues down to -kPsdClamp are rounding noise in PSD contexts.
inline constexpr double kPsdClamp = 1e-10;

/// Cyclic complex Jacobi diagonalisation. Throws NotHermitian when the input
/// asymmetry exceeds `tol`; the input is symmetrised before rotating.
HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol = kHermitianTol);
RealSpectrum hermitian_eigenvalues(const ComplexMatrix& m, double tol = kHermitianTol);

/// PSD square root. Eigenvalues in [-tol, 0) are clamped to zero; anything
/// lower throws NotPositive.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double tol = kPsdClamp);

/// exp(scale * M) for Hermitian M.
ComplexMatrix hermitian_exp(const ComplexMatrix& m, double scale);

/// exp(-i t H) for Hermitian H.
ComplexMatrix unitary_propagator(const ComplexMatrix& h, double t);

/// Kronecker product of two 2x2 matrices in |00>,|01>,|10>,|11> order.
ComplexMatrix kron2(const ComplexMatrix& a, const ComplexMatrix& b);
/// General Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Spectrum of A*B for PSD A, B, computed from the Hermitian sqrt(A) B sqrt(A).
/// Values are clamped at zero from below.
RealSpectrum product_spectrum(const ComplexMatrix& a, const ComplexMatrix& b,
                              double tol = kPsdClamp);

// Pauli matrices, and two-qubit products sigma_1^a sigma_2^b.
enum class Pauli { I, X, Y, Z };

const ComplexMatrix& pauli(Pauli p);
/// pauli(a) (x) pauli(b).
const ComplexMatrix& pauli2(Pauli a, Pauli b);

}  // namespace spinpair
