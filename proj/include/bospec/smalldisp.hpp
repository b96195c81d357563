#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bospec/symbol.hpp"

namespace bospec {

/// exp((1/2π)∫ log(1/(u - v(θ))) dθ), trapezoid rule on quad_points nodes.
/// Requires Im u != 0 and quad_points >= 512.
Complex szego_geometric_mean(const FourierSymbol& v, Complex u, std::size_t quad_points = 1024);

/// Root of T² - uT + 1 = 0 inside the unit disk, i.e. (u - √(u² - 4))/2 on the
/// branch asymptotic to 1/u: the Stieltjes transform of the semicircle law on [-2, 2].
Complex semicircle_stieltjes(Complex u);

/// (2/π)(c·arcsin(c/2) + √(4 - c²)) for |c| <= 2 and |c| otherwise.
double vkls_profile(double c);

struct SweepCell {
  double eps = 0.0;
  Complex u;
  Complex phi;
  Complex target;
  double abs_err = 0.0;
  std::size_t dim = 0;
  bool converged = false;
};

struct DispersionSweep {
  FourierSymbol symbol;
  std::vector<double> eps_list;  // strictly decreasing
  std::vector<Complex> u_grid;   // |Im u| >= 0.5
  std::vector<SweepCell> results;  // row-major in (eps, u)
  std::vector<bool> monotone;      // per u: abs_err strictly decreasing along eps_list

  const SweepCell& cell(std::size_t eps_index, std::size_t u_index) const {
    return results.at(eps_index * u_grid.size() + u_index);
  }
};

/// Fills results and monotone. The target is szego_geometric_mean with
/// quad_points nodes. Throws std::invalid_argument on a malformed sweep.
void dispersion_sweep(DispersionSweep& sweep, double trunc_tol, std::size_t cap = 4096,
                      std::size_t quad_points = 4096);

/// Maximum slope breaking time 1/max(-v0') estimated on a 4096-point grid;
/// infinity when v0 never decreases.
double breaking_time(const FourierSymbol& v0);

/// Solution of the inviscid Burgers equation at uniform points x_j = 2πj/count,
/// by inverting x = x0 + t·v0(x0). Throws BreakingTimeExceeded past 0.9·breaking_time.
std::vector<double> evolve_burgers(const FourierSymbol& v0, double t, std::size_t count);

struct BurgersReport {
  double breaking_time = 0.0;
  std::vector<double> times;
  // moments[i][l] = (1/2π)∫ v(x, t_i)^l dx for l = 0..l_max
  std::vector<std::vector<double>> moments;         // along characteristics
  std::vector<std::vector<double>> direct_moments;  // from samples of the evolved field
  double drift = 0.0;         // max over t, l of |moment - moment at the first time|
  double direct_drift = 0.0;
};

/// Requires l_max <= 8; every t must lie below 0.9 times the breaking time.
BurgersReport burgers_conservation_check(const FourierSymbol& v0, std::span<const double> times, int l_max,
                                         std::size_t grid = 4096);

struct RecurrenceRow {
  Complex u;
  Complex t_u;       // T(u)
  Complex t_shift;   // T(u + ε)
  Complex limit;     // semicircle_stieltjes(u)
  double residual_minus = 0.0;  // |T(u + ε) + 1/T(u) - u|
  double residual_plus = 0.0;   // |T(u + ε) + 1/T(u) + u|
  std::size_t dim = 0;
  bool converged = false;
};

/// T(u) = Φ₀(u | 2cos x; ε) on adaptively truncated matrices with N >= min_dim.
/// Requires Im u >= 2 at every grid point.
std::vector<RecurrenceRow> sinusoidal_functional_equation(double eps, double trunc_tol,
                                                          std::span<const Complex> u_grid,
                                                          std::size_t min_dim = 1024,
                                                          std::size_t cap = 8192);

}  // namespace bospec
