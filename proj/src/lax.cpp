#include "bospec/lax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "bospec/errors.hpp"

namespace bospec {

TruncatedLaxPair build_lax_pair(const FourierSymbol& v, double eps, std::size_t n) {
  if (!(eps > 0.0)) throw std::invalid_argument("dispersion eps must be positive");
  if (n < 2) throw std::invalid_argument("truncation N must be at least 2");

  const auto bandwidth = static_cast<std::size_t>(v.max_mode());
  HermitianMatrix full(n, bandwidth);
  for (std::size_t j = 0; j < n; ++j) {
    full.set(j, j, v.mean() - static_cast<double>(j) * eps);
    for (std::size_t i = j + 1; i < std::min(n, j + bandwidth + 1); ++i) {
      full.set(i, j, v.coeff(static_cast<long>(i - j)));
    }
  }
  HermitianMatrix minor = full.trailing_block(1);
  return TruncatedLaxPair{eps, n, v.mean(), std::move(full), std::move(minor)};
}

InterlacedSpectra spectra(const TruncatedLaxPair& pair) {
  InterlacedSpectra s;
  s.up = hermitian_eigenvalues(pair.full);
  s.down = hermitian_eigenvalues(pair.minor_block);
  s.matrix_norm = pair.full.norm();

  double worst = 0.0;
  for (std::size_t h = 1; h < s.up.size(); ++h) {
    const double dn = s.down[h - 1];
    worst = std::max({worst, s.up[h] - dn, dn - s.up[h - 1]});
  }
  s.max_violation = worst;
  if (worst > 1e-9 * std::max(1.0, s.matrix_norm)) {
    std::ostringstream os;
    os << "Cauchy interlacing violated by " << worst << " (norm " << s.matrix_norm << ", N "
       << pair.dim << ")";
    throw InterlacingViolation(os.str());
  }
  s.interlacing_checked = true;
  return s;
}

Complex baker_akhiezer_average(const TruncatedLaxPair& pair, Complex u) {
  if (std::abs(u.imag()) < 1e-8) {
    throw PoleError("Baker-Akhiezer average needs |Im u| >= 1e-8");
  }
  std::vector<Complex> e0(pair.dim, Complex{});
  e0[0] = 1.0;
  return LuFactorization(pair.full, u).solve(e0)[0];
}

Complex product_formula(const InterlacedSpectra& s, Complex u) {
  if (s.up.empty()) throw std::invalid_argument("empty spectra");
  auto check_pole = [&](double c) {
    if (std::abs(u - c) < 1e-12) throw PoleError("evaluation point lies on a pole");
  };
  if (u.imag() == 0.0) throw PoleError("product formula needs u off the real axis");
  Complex value{1.0, 0.0};
  for (std::size_t h = 1; h < s.up.size(); ++h) {
    check_pole(s.up[h - 1]);
    value *= (u - s.down[h - 1]) / (u - s.up[h - 1]);
  }
  check_pole(s.up.back());
  return value / (u - s.up.back());
}

DiscreteMeasure spectral_shift(const InterlacedSpectra& s) {
  DiscreteMeasure m;
  m.atoms.reserve(s.up.size() + s.down.size() + 1);
  for (double c : s.up) m.atoms.push_back({c, 1.0});
  for (double c : s.down) m.atoms.push_back({c, -1.0});
  m.atoms.push_back({s.embedded_zero, -1.0});
  m.sort_by_location();
  return m;
}

double relative_trace(const TruncatedLaxPair& pair) {
  // Neumaier summation.
  double sum = 0.0;
  double carry = 0.0;
  auto add = [&](double x) {
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  };
  for (std::size_t h = 0; h < pair.full.dim(); ++h) add(pair.full(h, h).real());
  for (std::size_t h = 0; h < pair.minor_block.dim(); ++h) add(-pair.minor_block(h, h).real());
  return sum + carry;
}

double gap_threshold(const FourierSymbol& v) {
  const std::size_t grid = std::max<std::size_t>(1024, 4 * static_cast<std::size_t>(v.max_mode()) + 1);
  const double sup_abs = std::max(std::abs(sup_estimate(v, grid)), std::abs(inf_estimate(v, grid)));
  return 1e-8 * std::max(1.0, sup_abs);
}

AdaptiveTruncation adaptive_truncation(const FourierSymbol& v, double eps, double tol,
                                       std::size_t tracked, std::size_t cap, std::size_t start) {
  if (!(tol > 0.0)) throw std::invalid_argument("truncation tolerance must be positive");
  if (tracked < 1) throw std::invalid_argument("must track at least one eigenvalue");
  if (start < 2 || cap < start) throw std::invalid_argument("invalid truncation range");

  std::size_t n = start;
  TruncatedLaxPair pair = build_lax_pair(v, eps, n);
  std::vector<double> top = hermitian_eigenvalues(pair.full);
  double movement = 0.0;
  bool converged = false;
  // The accepted pair is the smaller of the two truncations that agree.
  while (n < cap) {
    const std::size_t next_n = std::min(2 * n, cap);
    TruncatedLaxPair next = build_lax_pair(v, eps, next_n);
    std::vector<double> next_top = hermitian_eigenvalues(next.full);
    const std::size_t m = std::min({tracked, top.size(), next_top.size()});
    movement = 0.0;
    for (std::size_t h = 0; h < m; ++h) movement = std::max(movement, std::abs(next_top[h] - top[h]));
    if (movement < tol) {
      converged = true;
      break;
    }
    pair = std::move(next);
    top = std::move(next_top);
    n = next_n;
  }
  AdaptiveTruncation out{std::move(pair), {}, movement, converged};
  out.spectra = spectra(out.pair);
  return out;
}

ResolventValue adaptive_baker_akhiezer(const FourierSymbol& v, double eps, Complex u, double tol,
                                       std::size_t cap, std::size_t start) {
  if (!(tol > 0.0)) throw std::invalid_argument("truncation tolerance must be positive");
  if (start < 2 || cap < start) throw std::invalid_argument("invalid truncation range");
  ResolventValue r;
  r.dim = start;
  r.value = baker_akhiezer_average(build_lax_pair(v, eps, start), u);
  r.change = std::numeric_limits<double>::infinity();
  while (r.dim < cap) {
    const std::size_t next = std::min(2 * r.dim, cap);
    const Complex value = baker_akhiezer_average(build_lax_pair(v, eps, next), u);
    r.change = std::abs(value - r.value);
    r.value = value;
    r.dim = next;
    if (r.change < tol) {
      r.converged = true;
      break;
    }
  }
  return r;
}

}  // namespace bospec
