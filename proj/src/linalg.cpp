#include "bospec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "bospec/errors.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace bospec {

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(std::size_t dim, std::size_t bandwidth)
    : dim_(dim), bandwidth_(dim == 0 ? 0 : std::min(bandwidth, dim - 1)) {
  if (dim == 0) throw std::invalid_argument("HermitianMatrix dimension must be positive");
  band_.assign((bandwidth_ + 1) * dim_, Complex{});
}

HermitianMatrix HermitianMatrix::from_dense(std::size_t dim, std::span<const Complex> row_major) {
  if (row_major.size() != dim * dim) {
    throw std::invalid_argument("dense matrix size does not match dimension");
  }
  double max_entry = 0.0;
  std::size_t bw = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double mag = std::abs(row_major[i * dim + j]);
      max_entry = std::max(max_entry, mag);
      if (mag != 0.0) bw = std::max(bw, i > j ? i - j : j - i);
    }
  }
  const double tol = 1e-12 * max_entry;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const double defect = std::abs(row_major[i * dim + j] - std::conj(row_major[j * dim + i]));
      if (defect > tol) throw NonHermitianMatrix(i, j, defect);
    }
  }
  HermitianMatrix out(dim, bw);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = j; i < std::min(dim, j + out.bandwidth_ + 1); ++i) {
      out.set(i, j, 0.5 * (row_major[i * dim + j] + std::conj(row_major[j * dim + i])));
    }
  }
  return out;
}

Complex HermitianMatrix::operator()(std::size_t i, std::size_t j) const noexcept {
  if (i >= j) {
    if (i - j > bandwidth_) return {};
    return band_[(i - j) + j * (bandwidth_ + 1)];
  }
  if (j - i > bandwidth_) return {};
  return std::conj(band_[(j - i) + i * (bandwidth_ + 1)]);
}

void HermitianMatrix::set(std::size_t i, std::size_t j, Complex value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("HermitianMatrix index");
  if (i < j) {
    std::swap(i, j);
    value = std::conj(value);
  }
  if (i - j > bandwidth_) {
    if (value == Complex{}) return;
    throw std::out_of_range("HermitianMatrix entry outside the stored band");
  }
  if (i == j) value = value.real();
  band_[(i - j) + j * (bandwidth_ + 1)] = value;
}

double HermitianMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t j = 0; j < dim_; ++j) t += band_[j * (bandwidth_ + 1)].real();
  return t;
}

double HermitianMatrix::norm() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    const std::size_t lo = i > bandwidth_ ? i - bandwidth_ : 0;
    const std::size_t hi = std::min(dim_ - 1, i + bandwidth_);
    double row = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

HermitianMatrix HermitianMatrix::trailing_block(std::size_t skip) const {
  if (skip >= dim_) throw std::invalid_argument("trailing_block would be empty");
  HermitianMatrix out(dim_ - skip, bandwidth_);
  for (std::size_t j = 0; j < out.dim_; ++j) {
    for (std::size_t d = 0; d <= out.bandwidth_ && j + d < out.dim_; ++d) {
      out.band_[d + j * (out.bandwidth_ + 1)] = band_[d + (j + skip) * (bandwidth_ + 1)];
    }
  }
  return out;
}

std::vector<Complex> HermitianMatrix::to_dense() const {
  std::vector<Complex> out(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[i * dim_ + j] = (*this)(i, j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim_ * dim_) throw std::invalid_argument("ComplexMatrix size mismatch");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::shifted_negative(const HermitianMatrix& a, Complex u) {
  const std::size_t n = a.dim();
  const std::size_t bw = a.bandwidth();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > bw ? i - bw : 0;
    const std::size_t hi = std::min(n - 1, i + bw);
    for (std::size_t j = lo; j <= hi; ++j) m(i, j) = -a(i, j);
    m(i, i) += u;
  }
  return m;
}

std::vector<Complex> ComplexMatrix::multiply(std::span<const Complex> x) const {
  std::vector<Complex> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < dim_; ++j) acc += data_[i * dim_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

double ComplexMatrix::norm() const noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) row += std::abs(data_[i * dim_ + j]);
    best = std::max(best, row);
  }
  return best;
}

// ---------------------------------------------------------------------------
// LuFactorization

LuFactorization::LuFactorization(const ComplexMatrix& a) : dim_(a.dim()) {
  const std::size_t n = dim_;
  if (n == 0) throw std::invalid_argument("cannot factor an empty matrix");
  std::size_t lower = 0;
  std::size_t upper = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == Complex{}) continue;
      if (i > j) lower = std::max(lower, i - j);
      if (j > i) upper = std::max(upper, j - i);
    }
  }
  allocate(lower, upper);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > lower_ ? i - lower_ : 0;
    const std::size_t hi = std::min(n - 1, i + upper_);
    for (std::size_t j = lo; j <= hi; ++j) at(i, j) = a(i, j);
  }
  factor(a.norm());
}

LuFactorization::LuFactorization(const HermitianMatrix& a, Complex u) : dim_(a.dim()) {
  const std::size_t n = dim_;
  const std::size_t bw = a.bandwidth();
  allocate(bw, bw);
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i > bw ? i - bw : 0;
    const std::size_t hi = std::min(n - 1, i + bw);
    double row = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) {
      Complex entry = -a(i, j);
      if (i == j) entry += u;
      at(i, j) = entry;
      row += std::abs(entry);
    }
    norm = std::max(norm, row);
  }
  factor(norm);
}

void LuFactorization::allocate(std::size_t lower, std::size_t upper) {
  lower_ = lower;
  upper_ = upper;
  width_ = 2 * lower_ + upper_ + 1;
  lu_.assign(dim_ * width_, Complex{});
  pivots_.resize(dim_);
}

void LuFactorization::factor(double norm) {
  const std::size_t n = dim_;
  const double threshold = 1e-14 * norm;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t last_row = std::min(n - 1, k + lower_);
    const std::size_t last_col = std::min(n - 1, k + upper_ + lower_);
    std::size_t p = k;
    double best = std::abs(at(k, k));
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const double mag = std::abs(at(i, k));
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    if (!(best > threshold) || best == 0.0) throw SingularMatrix(k, best, norm);
    pivots_[k] = p;
    if (p != k) {
      for (std::size_t j = k; j <= last_col; ++j) std::swap(at(k, j), at(p, j));
      det_ = -det_;
    }
    const Complex pivot = at(k, k);
    det_ *= pivot;
    for (std::size_t i = k + 1; i <= last_row; ++i) {
      const Complex factor = at(i, k) / pivot;
      at(i, k) = factor;
      if (factor == Complex{}) continue;
      for (std::size_t j = k + 1; j <= last_col; ++j) at(i, j) -= factor * at(k, j);
    }
  }
}

std::vector<Complex> LuFactorization::solve(std::span<const Complex> b) const {
  const std::size_t n = dim_;
  if (b.size() != n) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<Complex> x(b.begin(), b.end());
  for (std::size_t k = 0; k < n; ++k) {
    if (pivots_[k] != k) std::swap(x[k], x[pivots_[k]]);
    const std::size_t last_row = std::min(n - 1, k + lower_);
    for (std::size_t i = k + 1; i <= last_row; ++i) x[i] -= at(i, k) * x[k];
  }
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t last_col = std::min(n - 1, k + upper_ + lower_);
    Complex acc = x[k];
    for (std::size_t j = k + 1; j <= last_col; ++j) acc -= at(k, j) * x[j];
    x[k] = acc / at(k, k);
  }
  return x;
}

std::vector<Complex> complex_solve(const ComplexMatrix& a, std::span<const Complex> b) {
  if (b.size() != a.dim()) throw std::invalid_argument("right-hand side length mismatch");
  return LuFactorization(a).solve(b);
}

// ---------------------------------------------------------------------------
// Eigenvalues

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& a) {
  const std::size_t n = a.dim();
  const std::size_t kd = a.bandwidth();
  std::vector<double> w(n);
  lapack_int info = 0;
  if (4 * kd < n) {
    std::vector<Complex> ab = a.band_storage();
    Complex unused{};
    info = LAPACKE_zhbev(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(n),
                         static_cast<lapack_int>(kd), ab.data(), static_cast<lapack_int>(kd + 1),
                         w.data(), &unused, 1);
  } else {
    std::vector<Complex> dense(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) dense[i + j * n] = a(i, j);
    }
    info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', static_cast<lapack_int>(n), dense.data(),
                          static_cast<lapack_int>(n), w.data());
  }
  if (info != 0) throw EigensolverFailure(n, a.norm(), static_cast<int>(info));
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

}  // namespace bospec
