#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bospec {

using Complex = std::complex<double>;

struct FourierMode {
  long k = 0;
  Complex value;
};

/// Bounded real 2π-periodic symbol given by a trigonometric polynomial.
///
/// Coefficients follow the convention V_k = (1/2π) ∫ e^{ikx} v(x) dx, so that
/// v(x) = Σ_k V_{-k} e^{ikx} and the Lax matrix entry (h, h') is V_{h-h'}.
/// Only k >= 0 is stored; V_{-k} = conj(V_k) is implied.
class FourierSymbol {
 public:
  FourierSymbol() : coeffs_(1, Complex{0.0, 0.0}) {}

  /// Throws RealityViolation when a mode lacks its conjugate partner (beyond 1e-12)
  /// or V_0 has an imaginary part; a mode listed twice is an InputError.
  static FourierSymbol from_fourier(std::span<const FourierMode> modes);
  static FourierSymbol constant(double a);
  /// amplitude * cos x
  static FourierSymbol cosine(double amplitude);

  int max_mode() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(long k) const noexcept;
  double mean() const noexcept { return coeffs_[0].real(); }

  double evaluate(double x) const noexcept;
  double derivative(double x) const noexcept;
  /// ∫_0^x v(y) dy, exact for the trigonometric polynomial.
  double antiderivative(double x) const noexcept;

  /// Nonzero modes for k = -K..K in increasing k.
  std::vector<FourierMode> modes() const;

  /// |V_0| + 2 Σ_{k>0} |V_k|, an upper bound on sup |v|.
  double sup_norm_bound() const noexcept;

  FourierSymbol operator-() const;
  /// v + c
  FourierSymbol shifted(double c) const;

  friend bool operator==(const FourierSymbol&, const FourierSymbol&) = default;

 private:
  explicit FourierSymbol(std::vector<Complex> nonneg) : coeffs_(std::move(nonneg)) { trim(); }
  void trim();

  std::vector<Complex> coeffs_;  // V_0..V_K
};

/// Grid maximum of v over grid_size uniform points, refined by one parabolic fit.
/// Requires grid_size >= 4K + 1.
double sup_estimate(const FourierSymbol& v, std::size_t grid_size);
double inf_estimate(const FourierSymbol& v, std::size_t grid_size);

/// (1/2π)∫ v by the trapezoid rule on n uniform points.
double trapezoid_mean(const FourierSymbol& v, std::size_t n);

/// Discrete Fourier analysis of uniform samples v(2πj/P), j = 0..P-1.
/// Modes |k| < P/2 with |V_k| > drop_below are kept.
FourierSymbol fit_symbol(std::span<const double> samples, double drop_below = 1e-12);

}  // namespace bospec
