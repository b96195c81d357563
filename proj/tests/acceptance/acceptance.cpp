// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "bospec/errors.hpp"
#include "bospec/lax.hpp"
#include "bospec/multiphase.hpp"
#include "bospec/profile.hpp"
#include "bospec/smalldisp.hpp"
#include "support.hpp"

using bospec::Complex;
using bospec::FourierSymbol;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// The 20 random symbols shared by the matrix criteria.
const std::vector<FourierSymbol>& symbols() {
  static const std::vector<FourierSymbol> list = [] {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> degree(1, 8);
    std::vector<FourierSymbol> out;
    for (int i = 0; i < 20; ++i) out.push_back(testing::random_symbol(rng, degree(rng), 1.0));
    return out;
  }();
  return list;
}

constexpr double kEpsValues[] = {0.1, 1.0};

std::vector<Complex> test_points() {
  std::mt19937_64 rng(77);
  return testing::random_points(rng, 10, 0.5, 3.0, 4.0);
}

bospec::MultiPhaseParams one_phase() {
  const std::vector<double> s{-2.0, -1.0, 0.0};
  return bospec::MultiPhaseParams::from_ordered(1.0, s, {0.0});
}

bospec::MultiPhaseParams two_phase() {
  const std::vector<double> s{-5.0, -4.0, -2.0, -1.0, 0.0};
  return bospec::MultiPhaseParams::from_ordered(1.0, s, {0.3, 1.1});
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome interlacing() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& v : symbols()) {
    for (double eps : kEpsValues) {
      const auto pair = bospec::build_lax_pair(v, eps, 256);
      try {
        const auto s = bospec::spectra(pair);
        worst = std::max(worst, s.max_violation / pair.full.norm());
      } catch (const bospec::InterlacingViolation& e) {
        return {false, e.what()};
      }
    }
  }
  const double elapsed = seconds_since(start);
  return {worst < 1e-9 && elapsed < 60.0, fmt("max violation/norm %.3e, %.2f s", worst, elapsed)};
}

Outcome cramer() {
  double worst = 0.0;
  const auto points = test_points();
  for (const auto& v : symbols()) {
    for (double eps : kEpsValues) {
      const auto pair = bospec::build_lax_pair(v, eps, 256);
      const auto s = bospec::spectra(pair);
      for (Complex u : points) {
        const Complex a = bospec::baker_akhiezer_average(pair, u);
        const Complex b = bospec::product_formula(s, u);
        worst = std::max(worst, std::abs(a - b) / std::abs(a));
      }
    }
  }
  return {worst < 1e-8, fmt("max relative difference %.3e", worst)};
}

Outcome trace() {
  double worst = 0.0;
  double naive = 0.0;
  for (const auto& v : symbols()) {
    for (double eps : kEpsValues) {
      for (std::size_t n : {256u, 512u}) {
        const auto pair = bospec::build_lax_pair(v, eps, n);
        worst = std::max(worst, std::abs(bospec::relative_trace(pair) - v.mean()));
        naive = std::max(naive, std::abs(pair.full.trace() - pair.minor_block.trace() - v.mean()));
      }
    }
  }
  return {worst < 1e-12,
          fmt("max |relative trace - V_0| %.3e (difference of separately rounded traces %.3e)", worst, naive)};
}

Outcome shift_relation() {
  constexpr std::size_t n = 512;
  double worst = 0.0;
  for (const auto& v : symbols()) {
    for (double eps : kEpsValues) {
      const auto minor = bospec::hermitian_eigenvalues(bospec::build_lax_pair(v, eps, n).minor_block);
      const auto shifted = bospec::hermitian_eigenvalues(bospec::build_lax_pair(v.shifted(-eps), eps, n).full);
      for (std::size_t h = 0; h < n / 2; ++h) worst = std::max(worst, std::abs(minor[h] - shifted[h]));
    }
  }
  return {worst < 1e-6, fmt("top %zu eigenvalues, max difference %.3e", n / 2, worst)};
}

Outcome finite_gap() {
  const auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = true;
  for (const auto& p : {one_phase(), two_phase()}) {
    const auto r = bospec::verify_finite_gap(p, 1e-6, 2048);
    ok = ok && r.passed && r.endpoint_error < 1e-6 && r.widest_spurious_gap < 1e-6 && r.truncation <= 2048;
    detail += fmt("n=%zu: endpoints %.2e, spurious %.2e, N=%zu; ", p.phases(), r.endpoint_error,
                  r.widest_spurious_gap, r.truncation);
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 120.0, detail + fmt("%.2f s", elapsed)};
}

Outcome reflection() {
  const auto fit = bospec::fit_wave_symbol(one_phase(), 0.0);
  const std::vector<std::size_t> dims{256, 512, 1024, 2048};
  const auto counts = bospec::gap_counts(-fit.symbol, 1.0, dims, 1e-6);
  bool ok = counts.front() > 1;
  std::string detail = "gap counts";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i > 0 && counts[i] < counts[i - 1]) ok = false;
    detail += fmt(" N=%zu:%zu", dims[i], counts[i]);
  }
  return {ok, detail};
}

Outcome conservation() {
  const std::vector<double> times{0.0, 0.3, 0.7};
  const std::vector<std::pair<double, std::vector<double>>> family{
      {1.0, {-2.0, -1.0, 0.0}}, {1.0, {-3.0, -1.0, 0.0}}, {0.5, {-1.5, -1.0, 0.0}}};
  double worst = 0.0;
  bool ok = true;
  for (const auto& [eps, s] : family) {
    const auto p = bospec::MultiPhaseParams::from_ordered(eps, s, {0.2});
    const auto r = bospec::conservation_check(p, times, 10, 1e-6);
    ok = ok && r.passed;
    worst = std::max(worst, r.drift);
  }
  return {ok && worst <= 1e-6, fmt("%zu waves, max top-10 drift %.3e", family.size(), worst)};
}

Outcome frozen_region() {
  double worst = -1e300;
  auto check = [&](const FourierSymbol& v, double eps) {
    const auto top = bospec::hermitian_eigenvalues(bospec::build_lax_pair(v, eps, 256).full).front();
    worst = std::max(worst, top - bospec::sup_estimate(v, 1 << 16));
  };
  for (const auto& v : symbols()) {
    for (double eps : kEpsValues) check(v, eps);
  }
  check(FourierSymbol::cosine(2.0), 1.0);
  check(FourierSymbol::cosine(2.0), 1.0 / 16);
  return {worst <= 1e-8, fmt("max (top eigenvalue - sup v) %.3e", worst)};
}

Outcome small_dispersion() {
  bospec::DispersionSweep sweep{FourierSymbol::cosine(2.0), {1.0, 0.5, 0.25, 0.125, 0.0625}, {{0.0, 2.0}}, {}, {}};
  bospec::dispersion_sweep(sweep, 1e-12);
  const double last = sweep.results.back().abs_err;

  std::mt19937_64 rng(4);
  bospec::DispersionSweep random{testing::random_symbol(rng, 4), {1.0 / 32}, {{0.0, 3.0}}, {}, {}};
  bospec::dispersion_sweep(random, 1e-12);
  const double other = random.results.front().abs_err;

  const bool ok = sweep.monotone.front() && last < 0.05 && other < 0.05;
  return {ok, fmt("2cos errors %.4e .. %.4e (%s), random degree 4 at eps=1/32: %.4e",
                  sweep.results.front().abs_err, last, sweep.monotone.front() ? "decreasing" : "NOT decreasing",
                  other)};
}

Outcome markov_krein() {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> size(1, 5);
  double stieltjes = 0.0;
  double moments = 0.0;
  double series = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const auto [minima, maxima] = testing::random_interlacing(rng, size(rng));
    const auto p = bospec::Profile::from_extrema(minima, maxima);
    const auto mu = bospec::transition_measure(p);
    for (Complex u : testing::random_points(rng, 10)) {
      Complex g{};
      for (const auto& atom : mu.atoms) g += atom.weight / (u - atom.location);
      stieltjes = std::max(stieltjes, std::abs(g - bospec::t_up_observable(p, u)));
    }
    const auto r = bospec::moments_and_logmoments(p, 8);
    moments = std::max({moments, std::abs(r.transition_moments[0] - 1.0),
                        std::abs(r.transition_moments[1] - p.center)});
    series = std::max(series, r.series_error);
  }
  const bool ok = stieltjes < 1e-10 && moments < 1e-10 && series < 1e-8;
  return {ok, fmt("Stieltjes %.3e, T0/T1 %.3e, series through order 8 %.3e", stieltjes, moments, series)};
}

Outcome vkls() {
  const auto p = bospec::ConvexProfile::from_symbol(FourierSymbol::cosine(2.0), 4096);
  double worst = 0.0;
  for (int j = 0; j <= 5000; ++j) {
    const double c = -2.5 + 5.0 * j / 5000.0;
    worst = std::max(worst, std::abs(p.evaluate(c) - bospec::vkls_profile(c)));
  }
  const double at_zero = std::abs(bospec::vkls_profile(0.0) - 4.0 / std::numbers::pi);
  const double pushed_zero = std::abs(p.evaluate(0.0) - 4.0 / std::numbers::pi);
  return {worst < 1e-8 && at_zero < 1e-12 && pushed_zero < 1e-12,
          fmt("sup error %.3e, f(0) error %.3e (pushforward %.3e)", worst, at_zero, pushed_zero)};
}

Outcome burgers() {
  const std::vector<double> times{0.0, 0.2, 0.4};
  const auto r = bospec::burgers_conservation_check(FourierSymbol::cosine(2.0), times, 6);
  return {r.drift < 1e-8 && r.direct_drift < 1e-8,
          fmt("moment drift %.3e, direct %.3e, breaking time %.4f", r.drift, r.direct_drift, r.breaking_time)};
}

Outcome recurrence() {
  const std::vector<Complex> us{{0.0, 2.0}, {0.0, 3.0}, {1.0, 2.0}};
  const auto rows = bospec::sinusoidal_functional_equation(1.0, 1e-13, us, 1024);
  double worst = 0.0;
  std::size_t dim = 1 << 30;
  bool converged = true;
  for (const auto& r : rows) {
    worst = std::max(worst, r.residual_minus);
    dim = std::min(dim, r.dim);
    converged = converged && r.converged;
  }
  return {worst < 1e-6 && dim >= 1024, fmt("max residual %.3e, N >= %zu%s", worst, dim,
                                           converged ? "" : " (truncation not converged)")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"interlacing", interlacing},
      {"cramer-identity", cramer},
      {"trace-identity", trace},
      {"shift-relation", shift_relation},
      {"finite-gap", finite_gap},
      {"reflection", reflection},
      {"conservation", conservation},
      {"frozen-region", frozen_region},
      {"small-dispersion", small_dispersion},
      {"markov-krein", markov_krein},
      {"vkls-oracle", vkls},
      {"burgers-conservation", burgers},
      {"sinusoidal-recurrence", recurrence},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
