#include "bospec/multiphase.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bospec/errors.hpp"
#include "bospec/lax.hpp"
#include "bospec/linalg.hpp"

namespace bospec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

MultiPhaseParams MultiPhaseParams::from_ordered(double eps, std::span<const double> s,
                                                std::vector<double> chi) {
  if (s.size() % 2 != 1) throw InputError("s must hold 2n + 1 values");
  const std::size_t n = s.size() / 2;
  MultiPhaseParams p;
  p.eps = eps;
  p.up.resize(n + 1);
  p.down.resize(n);
  // s = (s_n↑, s_n↓, ..., s_1↑, s_1↓, s_0↑)
  for (std::size_t i = 0; i <= n; ++i) p.up[i] = s[2 * (n - i)];
  for (std::size_t i = 1; i <= n; ++i) p.down[i - 1] = s[2 * (n - i) + 1];
  p.chi = std::move(chi);
  validate(p);
  return p;
}

std::vector<double> MultiPhaseParams::ordered() const {
  const std::size_t n = phases();
  std::vector<double> s(2 * n + 1);
  for (std::size_t i = 0; i <= n; ++i) s[2 * (n - i)] = up[i];
  for (std::size_t i = 1; i <= n; ++i) s[2 * (n - i) + 1] = down[i - 1];
  return s;
}

void validate(const MultiPhaseParams& p) {
  if (!(p.eps > 0.0) || !std::isfinite(p.eps)) throw InputError("eps must be positive");
  const std::size_t n = p.down.size();
  if (p.up.size() != n + 1) throw InputError("need n + 1 values s_i↑ for n values s_i↓");
  if (p.chi.size() != n) throw InputError("need one phase chi per s_i↓");
  const std::vector<double> s = p.ordered();
  for (double x : s) {
    if (!std::isfinite(x)) throw InputError("s contains a non-finite value");
  }
  for (double x : p.chi) {
    if (!std::isfinite(x)) throw InputError("chi contains a non-finite value");
  }
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (!(s[j] > s[j - 1])) {
      std::ostringstream os;
      os << "s must be strictly increasing as written; s[" << j - 1 << "] = " << s[j - 1] << ", s["
         << j << "] = " << s[j];
      throw InputError(os.str());
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const double k = (p.up[i - 1] - p.down[i - 1]) / p.eps;
    if (std::abs(k - std::round(k)) > 1e-9 * std::max(1.0, k)) {
      std::ostringstream os;
      os << "wavenumber k_" << i << " = " << k << " is not an integer (quasi-periodic wave)";
      throw InputError(os.str());
    }
  }
  (void)amplitudes(p);
}

std::vector<long> wavenumbers(const MultiPhaseParams& p) {
  std::vector<long> k;
  for (std::size_t i = 1; i <= p.phases(); ++i) {
    k.push_back(std::lround((p.up[i - 1] - p.down[i - 1]) / p.eps));
  }
  return k;
}

std::vector<double> amplitudes(const MultiPhaseParams& p) {
  const std::size_t n = p.phases();
  const double sn = p.up[n];
  std::vector<double> z(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double di = p.down[i - 1];
    const double ui = p.up[i - 1];
    double r = (ui - sn) / (di - sn);
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      const double dj = p.down[j - 1];
      const double uj = p.up[j - 1];
      r *= (di - dj) * (ui - uj) / ((ui - dj) * (di - uj));
    }
    if (!(r > 0.0)) {
      std::ostringstream os;
      os << "amplitude radicand for Z_" << i << " is not positive (" << r << ")";
      throw InputError(os.str());
    }
    z[i - 1] = std::sqrt(r);
  }
  return z;
}

std::vector<double> wavespeeds(const MultiPhaseParams& p) {
  std::vector<double> c;
  for (std::size_t i = 1; i <= p.phases(); ++i) c.push_back(0.5 * (p.down[i - 1] + p.up[i - 1]));
  return c;
}

Profile dk_profile(const MultiPhaseParams& p) {
  validate(p);
  Profile out = Profile::from_extrema(p.up, p.down);
  const std::size_t n = p.phases();
  double center = p.up[n];
  for (std::size_t i = 1; i <= n; ++i) center += std::abs(p.down[i - 1] - p.up[i - 1]);
  out.center = center;
  return out;
}

double evaluate_wave(const MultiPhaseParams& p, double x, double t) {
  const std::size_t n = p.phases();
  double base = p.up[n];
  for (std::size_t i = 1; i <= n; ++i) base -= p.up[i - 1] - p.down[i - 1];
  if (n == 0) return base;

  const std::vector<double> z = amplitudes(p);
  const std::vector<long> k = wavenumbers(p);
  const std::vector<double> c = wavespeeds(p);
  ComplexMatrix m(n);
  std::vector<Complex> dm(n);  // ∂_x M is diagonal
  for (std::size_t i = 0; i < n; ++i) {
    const double ki = static_cast<double>(k[i]);
    const Complex phase = z[i] * std::polar(1.0, ki * (x - p.chi[i] - c[i] * t));
    for (std::size_t j = 0; j < n; ++j) {
      const double scale = 1.0 / (p.up[i] - p.down[j]);
      m(i, j) = scale * ((i == j ? phase : Complex{}) - 1.0);
    }
    dm[i] = Complex{0.0, ki} * phase / (p.up[i] - p.down[i]);
  }

  std::optional<LuFactorization> lu;
  try {
    lu.emplace(m);
  } catch (const SingularMatrix&) {
    throw NearSingularEvaluation("multi-phase matrix is singular at this (x, t)");
  }
  if (std::abs(lu->determinant()) < 1e-13) {
    throw NearSingularEvaluation("|det M| below 1e-13; retry with a perturbed x");
  }
  // tr(M^{-1} ∂_x M) = Σ_i (M^{-1})_{ii} (∂_x M)_{ii}
  Complex trace{};
  std::vector<Complex> e(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(e.begin(), e.end(), Complex{});
    e[i] = 1.0;
    trace += lu->solve(e)[i] * dm[i];
  }
  return base + 2.0 * p.eps * trace.imag();
}

double one_phase_closed_form(const MultiPhaseParams& p, double x, double t) {
  if (p.phases() != 1) throw std::invalid_argument("closed form is for one-phase waves");
  const double s0 = p.up[0];
  const double s1u = p.up[1];
  const double s1d = p.down[0];
  const double k = (s0 - s1d) / p.eps;
  const double arg = k * (x - p.chi[0] - 0.5 * (s1d + s0) * t);
  const double denom = (s1d - s1u) + (s0 - s1u) - 2.0 * std::sqrt((s0 - s1u) / (s1d - s1u)) * std::cos(arg);
  return (s0 - s1d) * (s0 - s1d) / denom;
}

std::vector<double> sample_wave(const MultiPhaseParams& p, double t, std::size_t count) {
  std::vector<double> v(count);
  for (std::size_t j = 0; j < count; ++j) {
    v[j] = evaluate_wave(p, kTwoPi * static_cast<double>(j) / static_cast<double>(count), t);
  }
  return v;
}

WaveFit fit_wave_symbol(const MultiPhaseParams& p, double t, std::size_t max_samples) {
  validate(p);
  long kmax = 0;
  for (long k : wavenumbers(p)) kmax = std::max(kmax, k);
  std::size_t count = std::bit_ceil(std::max<std::size_t>(8 * static_cast<std::size_t>(kmax) + 1, 64));
  count = std::min(count, std::max<std::size_t>(max_samples, 64));

  auto attempt = [&](std::size_t m) {
    WaveFit fit;
    fit.symbol = fit_symbol(sample_wave(p, t, m));
    fit.samples = m;
    for (std::size_t j = 0; j < m; ++j) {
      const double x = kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(m);
      fit.residual = std::max(fit.residual, std::abs(fit.symbol.evaluate(x) - evaluate_wave(p, x, t)));
    }
    return fit;
  };
  WaveFit fit = attempt(count);
  while (fit.residual >= 1e-11 && 2 * count <= max_samples) {
    count *= 2;
    WaveFit next = attempt(count);
    // Stop at the rounding floor: doubling no longer halves the residual.
    const bool stalled = next.residual > 0.5 * fit.residual;
    if (next.residual < fit.residual) fit = std::move(next);
    if (stalled) break;
  }
  return fit;
}

FiniteGapReport verify_finite_gap(const MultiPhaseParams& p, double tol, std::size_t cap) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  FiniteGapReport r;
  r.predicted = dk_profile(p);

  const WaveFit fit = fit_wave_symbol(p, 0.0);
  r.fit_samples = fit.samples;
  r.fit_modes = fit.symbol.max_mode();
  r.fit_residual = fit.residual;
  r.inconclusive = fit.residual > 1e-8;

  // Track every eigenvalue above s_n↑ plus a margin below it.
  const std::size_t n = p.phases();
  const auto window = static_cast<std::size_t>(std::ceil((p.up[0] - p.up[n]) / p.eps));
  const std::size_t tracked = window + n + 10;
  const std::size_t start = std::min<std::size_t>(cap, 128);
  const AdaptiveTruncation at = adaptive_truncation(fit.symbol, p.eps, 0.1 * tol, tracked, cap, start);
  r.truncation = at.pair.dim;
  r.truncation_converged = at.converged;
  r.truncation_movement = at.movement;
  r.computed = profile_from_spectra(at.spectra, at.pair.mean, gap_threshold(fit.symbol));

  // Match each predicted gap to the nearest computed gap.
  const auto predicted = gaps(r.predicted);
  const auto computed = gaps(r.computed);
  std::vector<bool> used(computed.size(), false);
  r.endpoint_error = std::abs(r.computed.minima.front() - r.predicted.minima.front());
  for (const auto& [lo, hi] : predicted) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = computed.size();
    for (std::size_t j = 0; j < computed.size(); ++j) {
      if (used[j]) continue;
      const double d = std::max(std::abs(computed[j].first - lo), std::abs(computed[j].second - hi));
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best_j < computed.size()) used[best_j] = true;
    r.endpoint_error = std::max(r.endpoint_error, best);
  }
  for (std::size_t j = 0; j < computed.size(); ++j) {
    if (!used[j]) r.widest_spurious_gap = std::max(r.widest_spurious_gap, computed[j].second - computed[j].first);
  }
  r.passed = !r.inconclusive && r.endpoint_error <= tol && r.widest_spurious_gap <= tol;
  return r;
}

std::vector<std::size_t> gap_counts(const FourierSymbol& v, double eps, std::span<const std::size_t> dims,
                                    double width) {
  std::vector<std::size_t> counts;
  for (std::size_t n : dims) {
    const TruncatedLaxPair pair = build_lax_pair(v, eps, n);
    const Profile prof = profile_from_spectra(spectra(pair), pair.mean, width);
    counts.push_back(prof.gap_count());
  }
  return counts;
}

ConservationReport conservation_check(const MultiPhaseParams& p, std::span<const double> times,
                                      std::size_t m_top, double tol, std::size_t cap) {
  if (times.empty()) throw std::invalid_argument("need at least one time");
  if (m_top == 0) throw std::invalid_argument("must track at least one eigenvalue");
  ConservationReport r;
  r.times.assign(times.begin(), times.end());
  for (double t : times) {
    const WaveFit fit = fit_wave_symbol(p, t);
    r.fit_residual = std::max(r.fit_residual, fit.residual);
    const AdaptiveTruncation at =
        adaptive_truncation(fit.symbol, p.eps, 0.1 * tol, m_top, cap, std::min<std::size_t>(cap, 128));
    r.truncation = std::max(r.truncation, at.pair.dim);
    const std::size_t m = std::min(m_top, at.spectra.up.size());
    r.top.emplace_back(at.spectra.up.begin(), at.spectra.up.begin() + static_cast<std::ptrdiff_t>(m));
  }
  for (std::size_t h = 0; h < r.top.front().size(); ++h) {
    double lo = r.top.front()[h];
    double hi = lo;
    for (const auto& row : r.top) {
      lo = std::min(lo, row[h]);
      hi = std::max(hi, row[h]);
    }
    r.drift = std::max(r.drift, hi - lo);
  }
  r.passed = r.drift <= tol;
  return r;
}

}  // namespace bospec
