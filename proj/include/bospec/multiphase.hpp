#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bospec/profile.hpp"
#include "bospec/symbol.hpp"

namespace bospec {

/// Parameters of an n-phase periodic wave:
///   s_n↑ < s_n↓ < ... < s_1↑ < s_1↓ < s_0↑,
/// phases χ_1..χ_n and dispersion ε. Wavenumbers k_i = (s_{i-1}↑ - s_i↓)/ε must be
/// positive integers so the wave is 2π-periodic.
struct MultiPhaseParams {
  double eps = 1.0;
  std::vector<double> up;    // up[i] = s_i↑, i = 0..n
  std::vector<double> down;  // down[i-1] = s_i↓, i = 1..n
  std::vector<double> chi;   // chi[i-1] = χ_i

  /// s in the order written above (ascending, s_n↑ first). Validates.
  static MultiPhaseParams from_ordered(double eps, std::span<const double> s, std::vector<double> chi);

  std::size_t phases() const noexcept { return down.size(); }
  /// Inverse of from_ordered.
  std::vector<double> ordered() const;

  friend bool operator==(const MultiPhaseParams&, const MultiPhaseParams&) = default;
};

/// Throws InputError on ordering, phase-count, periodicity or amplitude defects.
void validate(const MultiPhaseParams& p);

std::vector<long> wavenumbers(const MultiPhaseParams& p);
/// Z_i; every radicand must be positive.
std::vector<double> amplitudes(const MultiPhaseParams& p);
/// ½(s_i↓ + s_{i-1}↑), the phase velocities in the determinant formula.
std::vector<double> wavespeeds(const MultiPhaseParams& p);

Profile dk_profile(const MultiPhaseParams& p);

/// v(x, t) = s_n↑ - Σ(s_{i-1}↑ - s_i↓) + 2ε Im tr(M^{-1} ∂_x M).
/// Throws NearSingularEvaluation when |det M| < 1e-13.
double evaluate_wave(const MultiPhaseParams& p, double x, double t);

/// The one-phase traveling wave in its classical closed form. Requires n = 1.
double one_phase_closed_form(const MultiPhaseParams& p, double x, double t);

/// v(2πj/count, t), j = 0..count-1.
std::vector<double> sample_wave(const MultiPhaseParams& p, double t, std::size_t count);

struct WaveFit {
  FourierSymbol symbol;
  std::size_t samples = 0;
  double residual = 0.0;  // max |fit - wave| at the midpoints of the sampling grid
};

/// Fourier fit of the wave at time t. Samples start at max(8·max k + 1, 64)
/// rounded up to a power of two and double until the residual is below 1e-11,
/// stops halving (rounding floor) or max_samples is reached.
WaveFit fit_wave_symbol(const MultiPhaseParams& p, double t, std::size_t max_samples = 65536);

struct FiniteGapReport {
  std::size_t truncation = 0;
  bool truncation_converged = false;
  double truncation_movement = 0.0;
  std::size_t fit_samples = 0;
  int fit_modes = 0;
  double fit_residual = 0.0;
  bool inconclusive = false;  // fit residual above 1e-8

  Profile predicted;
  Profile computed;
  double endpoint_error = 0.0;       // max distance of the predicted extrema to the computed ones
  double widest_spurious_gap = 0.0;  // widest computed gap not matched to a predicted one
  bool passed = false;
};

/// Fits the t = 0 wave, truncates adaptively (N <= cap) and compares the
/// non-empty gaps with the Dobrokhotov-Krichever profile.
FiniteGapReport verify_finite_gap(const MultiPhaseParams& p, double tol, std::size_t cap = 2048);

/// Number of gaps wider than `width` in the dispersive profile of v at each N.
std::vector<std::size_t> gap_counts(const FourierSymbol& v, double eps, std::span<const std::size_t> dims,
                                    double width);

struct ConservationReport {
  std::vector<double> times;
  std::vector<std::vector<double>> top;  // top eigenvalues per time
  std::size_t truncation = 0;
  double fit_residual = 0.0;  // worst over times
  double drift = 0.0;
  bool passed = false;
};

/// Top m_top eigenvalues of the full Lax matrix of the fitted wave at each time.
ConservationReport conservation_check(const MultiPhaseParams& p, std::span<const double> times,
                                      std::size_t m_top, double tol, std::size_t cap = 2048);

}  // namespace bospec
