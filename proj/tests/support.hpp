#pragma once

#include <algorithm>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "bospec/symbol.hpp"

namespace testing {

using bospec::Complex;

// Random real trigonometric polynomial with |V_k| <= bound for 1 <= k <= degree.
inline bospec::FourierSymbol random_symbol(std::mt19937_64& rng, int degree, double bound = 1.0) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<bospec::FourierMode> modes;
  modes.push_back({0, Complex{bound * unit(rng), 0.0}});
  for (long k = 1; k <= degree; ++k) {
    Complex c{unit(rng), unit(rng)};
    if (std::abs(c) > 1.0) c /= std::abs(c);
    c *= bound;
    modes.push_back({k, c});
    modes.push_back({-k, std::conj(c)});
  }
  return bospec::FourierSymbol::from_fourier(modes);
}

// 2n + 1 strictly decreasing values in [lo, hi] with gaps of at least min_step,
// returned as (minima, maxima) alternating minimum first.
inline std::pair<std::vector<double>, std::vector<double>> random_interlacing(std::mt19937_64& rng, int n,
                                                                              double lo = -2.0,
                                                                              double hi = 2.0,
                                                                              double min_step = 0.05) {
  std::uniform_real_distribution<double> unit(lo, hi);
  std::vector<double> pts;
  while (static_cast<int>(pts.size()) < 2 * n + 1) {
    const double x = unit(rng);
    if (std::all_of(pts.begin(), pts.end(), [&](double y) { return std::abs(x - y) >= min_step; })) pts.push_back(x);
  }
  std::sort(pts.begin(), pts.end(), std::greater<>());
  std::vector<double> minima;
  std::vector<double> maxima;
  for (std::size_t i = 0; i < pts.size(); ++i) (i % 2 == 0 ? minima : maxima).push_back(pts[i]);
  return {minima, maxima};
}

// Points in the upper or lower half-plane with |Im u| in [im_lo, im_hi].
inline std::vector<Complex> random_points(std::mt19937_64& rng, std::size_t count, double im_lo = 0.5,
                                          double im_hi = 3.0, double re_bound = 4.0) {
  std::uniform_real_distribution<double> re(-re_bound, re_bound);
  std::uniform_real_distribution<double> im(im_lo, im_hi);
  std::bernoulli_distribution flip(0.5);
  std::vector<Complex> out;
  for (std::size_t j = 0; j < count; ++j) out.emplace_back(re(rng), flip(rng) ? im(rng) : -im(rng));
  return out;
}

}  // namespace testing
