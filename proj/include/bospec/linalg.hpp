#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bospec {

using Complex = std::complex<double>;

/// N×N Hermitian matrix with entries confined to |i - j| <= bandwidth.
///
/// Only the lower band is stored, column-major in the LAPACK "AB" layout
/// (entry (i, j), j <= i <= j + bandwidth, at band[(i - j) + j * (bandwidth + 1)]).
/// A dense Hermitian matrix is the bandwidth = N - 1 case.
class HermitianMatrix {
 public:
  HermitianMatrix(std::size_t dim, std::size_t bandwidth);

  /// Validates Hermitian symmetry of a row-major N×N array to 1e-12 · max|entry|.
  /// Throws NonHermitianMatrix on failure.
  static HermitianMatrix from_dense(std::size_t dim, std::span<const Complex> row_major);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t bandwidth() const noexcept { return bandwidth_; }

  /// Entry (i, j) of the full matrix; zero outside the band.
  Complex operator()(std::size_t i, std::size_t j) const noexcept;

  /// Sets (i, j) and, implicitly, (j, i) = conj(value). The diagonal keeps only the real part.
  void set(std::size_t i, std::size_t j, Complex value);

  double trace() const noexcept;
  /// Maximum absolute row sum; an upper bound for the spectral norm.
  double norm() const noexcept;

  /// Principal submatrix with the first `skip` rows and columns deleted.
  HermitianMatrix trailing_block(std::size_t skip) const;

  std::vector<Complex> to_dense() const;
  const std::vector<Complex>& band_storage() const noexcept { return band_; }

 private:
  std::size_t dim_;
  std::size_t bandwidth_;
  std::vector<Complex> band_;
};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, std::vector<Complex> row_major);

  std::size_t dim() const noexcept { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

  static ComplexMatrix identity(std::size_t dim);
  /// u·I - A
  static ComplexMatrix shifted_negative(const HermitianMatrix& a, Complex u);

  std::vector<Complex> multiply(std::span<const Complex> x) const;
  double norm() const noexcept;  // maximum absolute row sum

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Banded LU factorization with partial (row) pivoting.
///
/// Lower and upper bandwidths are detected from the matrix, so tridiagonal and
/// narrow-band systems cost O(N·p·(p+q)) instead of O(N^3).
class LuFactorization {
 public:
  /// Throws SingularMatrix when a pivot falls below 1e-14 · ‖A‖.
  explicit LuFactorization(const ComplexMatrix& a);
  /// Factors u·I - A directly from band storage.
  LuFactorization(const HermitianMatrix& a, Complex u);

  std::vector<Complex> solve(std::span<const Complex> b) const;
  Complex determinant() const noexcept { return det_; }
  std::size_t lower_bandwidth() const noexcept { return lower_; }
  std::size_t upper_bandwidth() const noexcept { return upper_; }

 private:
  Complex& at(std::size_t i, std::size_t j) noexcept { return lu_[i * width_ + (j + lower_ - i)]; }
  Complex at(std::size_t i, std::size_t j) const noexcept {
    return lu_[i * width_ + (j + lower_ - i)];
  }

  void allocate(std::size_t lower, std::size_t upper);
  void factor(double norm);

  std::size_t dim_ = 0;
  std::size_t lower_ = 0;
  std::size_t upper_ = 0;
  std::size_t width_ = 0;  // stored columns per row: lower + (upper + lower) + 1
  std::vector<Complex> lu_;
  std::vector<std::size_t> pivots_;
  Complex det_{1.0, 0.0};
};

/// Eigenvalues in descending order. Deterministic for identical input.
/// Throws EigensolverFailure (carrying dimension and norm) if the kernel does not converge.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a);

/// Solves A x = b. Throws SingularMatrix for numerically singular A.
std::vector<Complex> complex_solve(const ComplexMatrix& a, std::span<const Complex> b);

}  // namespace bospec
