#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bospec/lax.hpp"
#include "bospec/measure.hpp"
#include "bospec/symbol.hpp"

namespace bospec {

/// Piecewise-linear Kerov profile stored through its extrema.
///
/// minima S_0↑ > S_1↑ > ... > S_n↑ and maxima S_1↓ > ... > S_n↓ interlace as
///   S_n↑ < S_n↓ < ... < S_1↑ < S_1↓ < S_0↑,
/// and f(c) = Σ|c - S_i↑| - Σ|c - S_i↓|. A truncated profile is a finite window
/// of a possibly infinite set; it keeps the same shape (one more minimum than
/// maxima), the lowest minimum closing the window.
struct Profile {
  double center = 0.0;
  std::vector<double> maxima;
  std::vector<double> minima;
  bool truncated = false;

  /// |c - a|
  static Profile absolute(double a);
  /// Complete profile from extrema; the center is Σ minima - Σ maxima.
  /// Throws InterlacingViolation unless the lists strictly interlace.
  static Profile from_extrema(std::vector<double> minima, std::vector<double> maxima);

  std::size_t gap_count() const noexcept { return maxima.size(); }
  double evaluate(double c) const;
  /// Rayleigh function F = (1 + f')/2, right-continuous.
  double rayleigh(double c) const;

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// Throws InterlacingViolation unless minima.size() == maxima.size() + 1 and the
/// lists interlace (strictly, or allowing ties when strict is false).
void check_interlacing(const Profile& p, bool strict = true);

/// Pairs C_h↑, C_h↓ (h >= 1) closer than delta_gap cancel; C_0↑ and the
/// endpoints of every remaining gap are kept. The center is set to `mean`.
Profile profile_from_spectra(const InterlacedSpectra& s, double mean, double delta_gap);

/// Gaps (S_i↑, S_i↓) and finite bands [S_i↓, S_{i-1}↑], i = 1..n, in the stored order.
std::vector<std::pair<double, double>> gaps(const Profile& p);
std::vector<std::pair<double, double>> bands(const Profile& p);
std::vector<double> band_midpoints(const Profile& p);

/// Π(u - S_i↓) / Π(u - S_i↑), asymptotic to 1/u. Throws std::invalid_argument for
/// real u and PoleError within 1e-12 of a recorded minimum.
Complex t_up_observable(const Profile& p, Complex u);

/// Residues of the T↑-observable at the minima. Requires a complete profile.
DiscreteMeasure transition_measure(const Profile& p);

/// Markov-Krein inverse for a finitely supported probability measure: the
/// maxima are the zeros of the Stieltjes transform between consecutive atoms.
Profile profile_from_measure(const DiscreteMeasure& mu);

struct MomentReport {
  std::vector<double> transition_moments;  // T_ℓ↑, ℓ = 0..pmax
  std::vector<double> log_moments;         // O_p, p = 0..pmax (O_0 = 0)
  std::vector<double> series_coefficients; // coefficients of exp(Σ O_p z^p / p)
  double series_error = 0.0;               // max_ℓ |coefficient - T_ℓ↑|
};

/// O_p = ∫ c^p dξ = Σ (S_i↑)^p - Σ (S_i↓)^p; the series check compares
/// u·T↑(u) = Σ T_ℓ u^{-ℓ} against exp(Σ O_p u^{-p} / p) through order pmax.
/// Requires pmax <= 20.
MomentReport moments_and_logmoments(const Profile& p, int pmax);

/// Convex action profile of a symbol: F(c) = |{x : v(x) <= c}| / 2π and
/// f(c) = (1/2π)∫|c - v(x)| dx.
///
/// Built from a trigonometric polynomial the level sets are located exactly
/// (roots bracketed on the grid and refined by bisection); built from uniform
/// samples both functions fall back to plain x-quadrature.
class ConvexProfile {
 public:
  /// grid >= 256 uniform x-points.
  static ConvexProfile from_symbol(const FourierSymbol& v, std::size_t grid);
  /// Uniform samples v(2πj/P) of a smooth periodic function, P >= 256.
  static ConvexProfile from_samples(std::vector<double> samples);

  double center() const noexcept { return center_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  const std::vector<double>& samples() const noexcept { return samples_; }

  double rayleigh(double c) const;
  double evaluate(double c) const;

  /// exp((1/2π)∫ log(1/(u - v(x))) dx) by the trapezoid rule on the stored samples.
  Complex t_up_observable(Complex u) const;

 private:
  ConvexProfile() = default;
  // Sublevel measure and ∫(c - v)_+ over one period, both divided by 2π.
  std::pair<double, double> sublevel(double c) const;

  std::vector<double> samples_;
  double center_ = 0.0;
  double lower_ = 0.0;
  double upper_ = 0.0;
  bool exact_ = false;
  FourierSymbol symbol_;
  std::vector<double> critical_;  // critical points of v in [0, 2π), ascending
};

inline Complex t_up_observable(const ConvexProfile& p, Complex u) { return p.t_up_observable(u); }

/// max over test points of |log(u T↑_p(u)) - log(u T↑_q(u))| (principal logs).
/// Throws std::invalid_argument when a test point has |Im u| < 0.5.
template <class P, class Q>
double profile_distance(const P& p, const Q& q, std::span<const Complex> test_points) {
  double worst = 0.0;
  for (Complex u : test_points) {
    if (std::abs(u.imag()) < 0.5) {
      throw std::invalid_argument("profile_distance test points need |Im u| >= 0.5");
    }
    const Complex lp = std::log(u * t_up_observable(p, u));
    const Complex lq = std::log(u * t_up_observable(q, u));
    worst = std::max(worst, std::abs(lp - lq));
  }
  return worst;
}

}  // namespace bospec
