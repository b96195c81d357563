#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bospec {

/// Base class of every numerical or input failure raised by the library.
/// Precondition violations on plain arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Fourier mode was supplied without a matching conjugate partner.
class RealityViolation : public Error {
 public:
  RealityViolation(long mode, double defect);
  long mode() const noexcept { return mode_; }
  double defect() const noexcept { return defect_; }

 private:
  long mode_;
  double defect_;
};

class NonHermitianMatrix : public Error {
 public:
  NonHermitianMatrix(std::size_t row, std::size_t col, double defect);
};

class EigensolverFailure : public Error {
 public:
  EigensolverFailure(std::size_t dim, double norm, int info);
  std::size_t dim() const noexcept { return dim_; }
  double norm() const noexcept { return norm_; }

 private:
  std::size_t dim_;
  double norm_;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix(std::size_t column, double pivot, double norm);
  double pivot() const noexcept { return pivot_; }

 private:
  double pivot_;
};

/// Evaluation point too close to a pole or to the real axis.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Computed spectra fail Cauchy interlacing; indicates an eigensolver defect.
class InterlacingViolation : public Error {
 public:
  using Error::Error;
};

class NearSingularEvaluation : public Error {
 public:
  using Error::Error;
};

class BreakingTimeExceeded : public Error {
 public:
  BreakingTimeExceeded(double t, double breaking_time);
  double breaking_time() const noexcept { return breaking_time_; }

 private:
  double breaking_time_;
};

/// Malformed or invalid configuration / file content.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace bospec
