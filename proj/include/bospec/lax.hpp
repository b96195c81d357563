#pragma once

#include <cstddef>
#include <vector>

#include "bospec/linalg.hpp"
#include "bospec/measure.hpp"
#include "bospec/symbol.hpp"

namespace bospec {

/// Galerkin truncation of the Benjamin-Ono Lax operator L(v; ε) = -ε D + T(v)
/// in the basis |h> = e^{ihx}, h = 0..N-1, together with its principal minor
/// (rows and columns h = 1..N-1).
struct TruncatedLaxPair {
  double eps = 0.0;
  std::size_t dim = 0;
  double mean = 0.0;  // V_0
  HermitianMatrix full;
  HermitianMatrix minor_block;
};

/// Entry (h, h') = V_{h-h'} - δ_{hh'} h ε. Requires eps > 0 and n >= 2.
TruncatedLaxPair build_lax_pair(const FourierSymbol& v, double eps, std::size_t n);

/// Eigenvalues of the full matrix (up, C_h↑ for h = 0..N-1) and of the
/// principal minor (down, C_h↓ for h = 1..N-1, so down[h-1] = C_h↓).
/// The embedded-minor eigenvalue C_0↓ = 0 is kept apart from the chain.
struct InterlacedSpectra {
  std::vector<double> up;
  std::vector<double> down;
  double embedded_zero = 0.0;
  bool interlacing_checked = false;
  double max_violation = 0.0;  // largest amount by which interlacing is broken (>= 0)
  double matrix_norm = 0.0;

  double down_at(std::size_t h) const { return down.at(h - 1); }
};

/// Throws InterlacingViolation if C_h↑ <= C_h↓ <= C_{h-1}↑ fails by more than 1e-9 · ‖full‖.
InterlacedSpectra spectra(const TruncatedLaxPair& pair);

/// <0| (u - L)^{-1} |0> from a linear solve. Throws PoleError for |Im u| < 1e-8.
Complex baker_akhiezer_average(const TruncatedLaxPair& pair, Complex u);

/// Cramer form Π_{h=1}^{N-1} (u - C_h↓)/(u - C_{h-1}↑) · 1/(u - C_{N-1}↑).
/// Throws PoleError when u is within 1e-12 of a pole or |Im u| == 0.
Complex product_formula(const InterlacedSpectra& s, Complex u);

/// Jump measure dξ of the spectral shift function ξ(c | L, L_+):
/// +1 at every C_h↑, -1 at every C_h↓ (h >= 1) and -1 at the embedded zero.
/// ξ(c) = dξ((-∞, c]) takes values in [-1, 1] and vanishes outside the spectrum window.
DiscreteMeasure spectral_shift(const InterlacedSpectra& s);

/// tr(full) - tr(minor) as one compensated sum over both diagonals, so the
/// result is not limited by the rounding of two traces of size ~εN²/2.
double relative_trace(const TruncatedLaxPair& pair);

/// Gap-emptiness threshold 1e-8 · max(1, ‖v‖_∞).
double gap_threshold(const FourierSymbol& v);

struct AdaptiveTruncation {
  TruncatedLaxPair pair;
  InterlacedSpectra spectra;
  double movement = 0.0;  // max change of the tracked eigenvalues at the last doubling
  bool converged = false;
};

/// Doubles N from `start` until the top `tracked` eigenvalues of the full matrix
/// move by less than tol, up to `cap`. A non-converged result is returned flagged.
AdaptiveTruncation adaptive_truncation(const FourierSymbol& v, double eps, double tol,
                                       std::size_t tracked, std::size_t cap = 4096,
                                       std::size_t start = 128);

struct ResolventValue {
  Complex value;
  std::size_t dim = 0;
  double change = 0.0;  // |Φ₀(N) - Φ₀(N/2)| at the returned N
  bool converged = false;
};

/// Baker-Akhiezer average with N doubled from `start` until two successive
/// values differ by less than tol, up to `cap`.
ResolventValue adaptive_baker_akhiezer(const FourierSymbol& v, double eps, Complex u, double tol,
                                       std::size_t cap = 4096, std::size_t start = 128);

}  // namespace bospec
