#include "bospec/smalldisp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bospec/errors.hpp"
#include "bospec/lax.hpp"

namespace bospec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double node(std::size_t j, std::size_t count) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(count);
}

}  // namespace

Complex szego_geometric_mean(const FourierSymbol& v, Complex u, std::size_t quad_points) {
  if (u.imag() == 0.0) throw std::invalid_argument("geometric mean needs u off the real axis");
  if (quad_points < 512) throw std::invalid_argument("quad_points must be at least 512");
  Complex acc{};
  for (std::size_t j = 0; j < quad_points; ++j) acc -= std::log(u - v.evaluate(node(j, quad_points)));
  return std::exp(acc / static_cast<double>(quad_points));
}

Complex semicircle_stieltjes(Complex u) {
  const Complex r = std::sqrt(u * u - 4.0);
  const Complex a = 0.5 * (u - r);
  const Complex b = 0.5 * (u + r);
  return std::abs(a) <= std::abs(b) ? a : b;
}

double vkls_profile(double c) {
  if (std::abs(c) >= 2.0) return std::abs(c);
  return (2.0 / std::numbers::pi) * (c * std::asin(0.5 * c) + std::sqrt(4.0 - c * c));
}

void dispersion_sweep(DispersionSweep& sweep, double trunc_tol, std::size_t cap, std::size_t quad_points) {
  if (sweep.eps_list.empty() || sweep.u_grid.empty()) throw std::invalid_argument("empty sweep");
  for (std::size_t i = 0; i < sweep.eps_list.size(); ++i) {
    if (!(sweep.eps_list[i] > 0.0)) throw std::invalid_argument("eps values must be positive");
    if (i > 0 && !(sweep.eps_list[i] < sweep.eps_list[i - 1])) {
      throw std::invalid_argument("eps_list must be strictly decreasing");
    }
  }
  for (Complex u : sweep.u_grid) {
    if (std::abs(u.imag()) < 0.5) throw std::invalid_argument("sweep points need |Im u| >= 0.5");
  }

  std::vector<Complex> targets;
  for (Complex u : sweep.u_grid) targets.push_back(szego_geometric_mean(sweep.symbol, u, quad_points));

  sweep.results.clear();
  for (double eps : sweep.eps_list) {
    for (std::size_t k = 0; k < sweep.u_grid.size(); ++k) {
      const Complex u = sweep.u_grid[k];
      const ResolventValue r = adaptive_baker_akhiezer(sweep.symbol, eps, u, trunc_tol, cap);
      sweep.results.push_back({eps, u, r.value, targets[k], std::abs(r.value - targets[k]), r.dim, r.converged});
    }
  }
  sweep.monotone.assign(sweep.u_grid.size(), true);
  for (std::size_t k = 0; k < sweep.u_grid.size(); ++k) {
    for (std::size_t i = 1; i < sweep.eps_list.size(); ++i) {
      if (!(sweep.cell(i, k).abs_err < sweep.cell(i - 1, k).abs_err)) sweep.monotone[k] = false;
    }
  }
}

double breaking_time(const FourierSymbol& v0) {
  constexpr std::size_t grid = 4096;
  double steepest = 0.0;
  for (std::size_t j = 0; j < grid; ++j) steepest = std::max(steepest, -v0.derivative(node(j, grid)));
  if (steepest <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / steepest;
}

std::vector<double> evolve_burgers(const FourierSymbol& v0, double t, std::size_t count) {
  const double tb = breaking_time(v0);
  if (t < 0.0) throw std::invalid_argument("time must be nonnegative");
  if (t > 0.9 * tb) throw BreakingTimeExceeded(t, tb);
  const double reach = t * v0.sup_norm_bound();
  std::vector<double> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double x = node(j, count);
    // x0 + t v0(x0) is increasing; safeguarded Newton inside a shrinking bracket.
    double lo = x - reach - 1e-12;
    double hi = x + reach + 1e-12;
    double x0 = x - t * v0.evaluate(x);
    for (int iter = 0; iter < 100; ++iter) {
      const double g = x0 + t * v0.evaluate(x0) - x;
      if (g > 0.0) {
        hi = x0;
      } else {
        lo = x0;
      }
      if (g == 0.0 || hi - lo < 1e-15 * std::max(1.0, std::abs(x))) break;
      double next = x0 - g / (1.0 + t * v0.derivative(x0));
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - x0) < 1e-16 * std::max(1.0, std::abs(x0))) {
        x0 = next;
        break;
      }
      x0 = next;
    }
    out[j] = v0.evaluate(x0);
  }
  return out;
}

BurgersReport burgers_conservation_check(const FourierSymbol& v0, std::span<const double> times, int l_max,
                                         std::size_t grid) {
  if (l_max < 0 || l_max > 8) throw std::invalid_argument("l_max must lie in [0, 8]");
  if (times.empty()) throw std::invalid_argument("need at least one time");
  if (grid < 256) throw std::invalid_argument("grid must be at least 256");
  BurgersReport r;
  r.breaking_time = breaking_time(v0);
  for (double t : times) {
    if (t > 0.9 * r.breaking_time) throw BreakingTimeExceeded(t, r.breaking_time);
  }
  const auto order = static_cast<std::size_t>(l_max);
  const auto n = static_cast<double>(grid);
  for (double t : times) {
    r.times.push_back(t);
    // ∫ v(x,t)^l dx = ∫ v0(x0)^l (1 + t v0'(x0)) dx0
    std::vector<double> m(order + 1, 0.0);
    for (std::size_t j = 0; j < grid; ++j) {
      const double x0 = node(j, grid);
      const double value = v0.evaluate(x0);
      const double jac = 1.0 + t * v0.derivative(x0);
      double power = 1.0;
      for (std::size_t l = 0; l <= order; ++l) {
        m[l] += power * jac;
        power *= value;
      }
    }
    for (double& x : m) x /= n;
    r.moments.push_back(std::move(m));

    std::vector<double> d(order + 1, 0.0);
    for (double value : evolve_burgers(v0, t, grid)) {
      double power = 1.0;
      for (std::size_t l = 0; l <= order; ++l) {
        d[l] += power;
        power *= value;
      }
    }
    for (double& x : d) x /= n;
    r.direct_moments.push_back(std::move(d));
  }
  for (std::size_t i = 1; i < r.times.size(); ++i) {
    for (std::size_t l = 0; l <= order; ++l) {
      r.drift = std::max(r.drift, std::abs(r.moments[i][l] - r.moments[0][l]));
      r.direct_drift = std::max(r.direct_drift, std::abs(r.direct_moments[i][l] - r.direct_moments[0][l]));
    }
  }
  return r;
}

std::vector<RecurrenceRow> sinusoidal_functional_equation(double eps, double trunc_tol,
                                                          std::span<const Complex> u_grid,
                                                          std::size_t min_dim, std::size_t cap) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (min_dim < 2 || cap < min_dim) throw std::invalid_argument("invalid truncation range");
  const FourierSymbol v = FourierSymbol::cosine(2.0);
  std::vector<RecurrenceRow> rows;
  for (Complex u : u_grid) {
    if (u.imag() < 2.0) throw std::invalid_argument("recurrence test points need Im u >= 2");
    const ResolventValue a = adaptive_baker_akhiezer(v, eps, u, trunc_tol, cap, min_dim);
    const ResolventValue b = adaptive_baker_akhiezer(v, eps, u + eps, trunc_tol, cap, min_dim);
    if (std::abs(a.value) < 1e-12) throw NearSingularEvaluation("|T(u)| below 1e-12");
    RecurrenceRow row;
    row.u = u;
    row.t_u = a.value;
    row.t_shift = b.value;
    row.limit = semicircle_stieltjes(u);
    row.residual_minus = std::abs(b.value + 1.0 / a.value - u);
    row.residual_plus = std::abs(b.value + 1.0 / a.value + u);
    row.dim = std::max(a.dim, b.dim);
    row.converged = a.converged && b.converged;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bospec
