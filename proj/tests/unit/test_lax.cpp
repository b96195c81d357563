#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bospec/errors.hpp"
#include "bospec/lax.hpp"
#include "support.hpp"

using bospec::Complex;
using bospec::FourierSymbol;

TEST_CASE("Lax matrix entries") {
  std::mt19937_64 rng(1);
  const FourierSymbol v = testing::random_symbol(rng, 3);
  const auto pair = bospec::build_lax_pair(v, 0.5, 8);
  CHECK(pair.full.bandwidth() == 3);
  for (std::size_t h = 0; h < 8; ++h) {
    for (std::size_t g = 0; g < 8; ++g) {
      const long d = static_cast<long>(h) - static_cast<long>(g);
      const Complex expected = v.coeff(d) - (h == g ? 0.5 * static_cast<double>(h) : 0.0);
      CHECK(std::abs(pair.full(h, g) - expected) < 1e-15);
    }
  }
  CHECK(pair.minor_block.dim() == 7);
  CHECK_THROWS_AS((void)bospec::build_lax_pair(v, 0.0, 8), std::invalid_argument);
  CHECK_THROWS_AS((void)bospec::build_lax_pair(v, 1.0, 1), std::invalid_argument);
}

TEST_CASE("sinusoidal N = 3 spectra match the hand computation") {
  const auto pair = bospec::build_lax_pair(FourierSymbol::cosine(2.0), 1.0, 3);
  const auto s = bospec::spectra(pair);
  const double r3 = std::sqrt(3.0);
  const double r5 = std::sqrt(5.0);
  REQUIRE(s.up.size() == 3);
  REQUIRE(s.down.size() == 2);
  CHECK(s.up[0] == doctest::Approx(-1 + r3));
  CHECK(s.up[1] == doctest::Approx(-1));
  CHECK(s.up[2] == doctest::Approx(-1 - r3));
  CHECK(s.down[0] == doctest::Approx((-3 + r5) / 2));
  CHECK(s.down[1] == doctest::Approx((-3 - r5) / 2));
  CHECK(s.down_at(1) == s.down[0]);
  CHECK(s.interlacing_checked);
}

TEST_CASE("sinusoidal N = 3 resolvent matches the ratio of characteristic polynomials") {
  const auto pair = bospec::build_lax_pair(FourierSymbol::cosine(2.0), 1.0, 3);
  for (Complex u : {Complex{0.0, 1.0}, Complex{1.5, -0.7}, Complex{-2.0, 3.0}}) {
    // det(u - minor) / det(u - full) for diag (0, -1, -2), off-diagonal 1.
    const Complex minor = (u + 1.0) * (u + 2.0) - 1.0;
    const Complex full = u * minor - (u + 2.0);
    CHECK(std::abs(bospec::baker_akhiezer_average(pair, u) - minor / full) < 1e-14);
  }
}

TEST_CASE("constant symbol: spectrum a - hε, resolvent 1/(u - a), every gap empty") {
  const double a = 0.7;
  const double eps = 0.25;
  const auto pair = bospec::build_lax_pair(FourierSymbol::constant(a), eps, 16);
  const auto s = bospec::spectra(pair);
  for (std::size_t h = 0; h < 16; ++h) CHECK(s.up[h] == doctest::Approx(a - eps * h));
  for (std::size_t h = 1; h < 16; ++h) CHECK(s.down_at(h) == doctest::Approx(a - eps * h));
  const Complex u{0.1, 0.9};
  CHECK(std::abs(bospec::baker_akhiezer_average(pair, u) - 1.0 / (u - a)) < 1e-15);
  CHECK(std::abs(bospec::product_formula(s, u) - 1.0 / (u - a)) < 1e-12);
}

TEST_CASE("spectral shift of a constant symbol is -1 between 0 and a") {
  const double a = 0.7;
  const auto s = bospec::spectra(bospec::build_lax_pair(FourierSymbol::constant(a), 1.0, 10));
  const auto xi = bospec::spectral_shift(s);
  CHECK(xi.total_mass() == doctest::Approx(0.0).scale(1.0));
  CHECK(xi.cumulative(-0.5) == doctest::Approx(0.0).scale(1.0));
  CHECK(xi.cumulative(0.0) == doctest::Approx(-1.0));
  CHECK(xi.cumulative(0.35) == doctest::Approx(-1.0));
  CHECK(xi.cumulative(0.7) == doctest::Approx(0.0).scale(1.0));
  CHECK(xi.cumulative(3.0) == doctest::Approx(0.0).scale(1.0));
  for (int p = 1; p <= 6; ++p) CHECK(xi.moment(p) == doctest::Approx(std::pow(a, p)).epsilon(1e-9));
}

TEST_CASE("property: interlacing, trace, Cramer and frozen region on random symbols") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const FourierSymbol v = testing::random_symbol(rng, 1 + trial % 8);
    const double eps = trial % 2 ? 0.1 : 1.0;
    const auto pair = bospec::build_lax_pair(v, eps, 96);
    const auto s = bospec::spectra(pair);
    CHECK(s.max_violation <= 1e-9 * std::max(1.0, s.matrix_norm));
    CHECK(std::abs(pair.full.trace() - pair.minor_block.trace() - v.mean()) < 1e-12);
    CHECK(s.up.front() <= sup_estimate(v, 4096) + 1e-8);
    for (Complex u : testing::random_points(rng, 5)) {
      const Complex direct = bospec::baker_akhiezer_average(pair, u);
      const Complex product = bospec::product_formula(s, u);
      CHECK(std::abs(direct - product) <= 1e-8 * std::abs(direct));
      if (u.imag() > 0) CHECK(direct.imag() < 0.0);  // Herglotz sign
    }
    const auto xi = bospec::spectral_shift(s);
    for (const auto& atom : xi.atoms) {
      const double value = xi.cumulative(atom.location);
      CHECK(value >= -1.0 - 1e-12);
      CHECK(value <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("minor block is the full matrix of v - ε one size down") {
  std::mt19937_64 rng(8);
  const FourierSymbol v = testing::random_symbol(rng, 5);
  const double eps = 0.3;
  const auto a = bospec::build_lax_pair(v, eps, 40);
  const auto b = bospec::build_lax_pair(v.shifted(-eps), eps, 39);
  const auto& x = a.minor_block.band_storage();
  const auto& y = b.full.band_storage();
  REQUIRE(x.size() == y.size());
  double worst = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) worst = std::max(worst, std::abs(x[j] - y[j]));
  // V_0 - hε against (V_0 - ε) - (h - 1)ε: equal up to rounding.
  CHECK(worst < 1e-13);
}

TEST_CASE("pole guards") {
  const auto pair = bospec::build_lax_pair(FourierSymbol::cosine(1.0), 1.0, 8);
  const auto s = bospec::spectra(pair);
  CHECK_THROWS_AS((void)bospec::baker_akhiezer_average(pair, Complex{0.3, 1e-9}), bospec::PoleError);
  CHECK_THROWS_AS((void)bospec::product_formula(s, Complex{0.3, 0.0}), bospec::PoleError);
  CHECK_NOTHROW((void)bospec::product_formula(s, Complex{0.3, 1e-6}));
}

TEST_CASE("adaptive truncation") {
  const auto constant = bospec::adaptive_truncation(FourierSymbol::constant(1.0), 1.0, 1e-10, 10);
  CHECK(constant.converged);
  CHECK(constant.pair.dim == 128);
  CHECK(constant.movement == 0.0);

  const auto cosine = bospec::adaptive_truncation(FourierSymbol::cosine(2.0), 0.5, 1e-10, 20);
  CHECK(cosine.converged);
  CHECK(cosine.movement < 1e-10);
  CHECK(cosine.spectra.interlacing_checked);

  const auto capped = bospec::adaptive_truncation(FourierSymbol::cosine(2.0), 0.5, 1e-10, 200, 256, 128);
  CHECK_FALSE(capped.converged);
  CHECK(capped.pair.dim == 256);
}

TEST_CASE("adaptive resolvent") {
  const Complex u{0.0, 2.0};
  const auto r = bospec::adaptive_baker_akhiezer(FourierSymbol::cosine(2.0), 1.0, u, 1e-13);
  CHECK(r.converged);
  CHECK(r.change < 1e-13);
  const auto pair = bospec::build_lax_pair(FourierSymbol::cosine(2.0), 1.0, r.dim);
  CHECK(std::abs(bospec::baker_akhiezer_average(pair, u) - r.value) == 0.0);
}

TEST_CASE("gap threshold scales with the sup norm") {
  CHECK(bospec::gap_threshold(FourierSymbol::constant(0.1)) == doctest::Approx(1e-8));
  CHECK(bospec::gap_threshold(FourierSymbol::cosine(6.0)) == doctest::Approx(3e-8));
}

TEST_CASE("relative trace equals V_0") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const FourierSymbol v = testing::random_symbol(rng, 1 + trial % 8);
    const auto pair = bospec::build_lax_pair(v, 0.1 + 0.1 * trial, 300);
    CHECK(std::abs(bospec::relative_trace(pair) - v.mean()) < 1e-13);
  }
}
