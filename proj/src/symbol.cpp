#include "bospec/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bospec/errors.hpp"

namespace bospec {

namespace {
constexpr double kRealityTol = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

FourierSymbol FourierSymbol::from_fourier(std::span<const FourierMode> modes) {
  std::map<long, Complex> given;
  for (const auto& m : modes) {
    if (!given.emplace(m.k, m.value).second) {
      throw InputError("Fourier mode " + std::to_string(m.k) + " listed twice");
    }
  }
  long kmax = 0;
  for (const auto& [k, c] : given) kmax = std::max(kmax, std::labs(k));

  std::vector<Complex> nonneg(static_cast<std::size_t>(kmax) + 1, Complex{});
  auto lookup = [&](long k) {
    auto it = given.find(k);
    return it == given.end() ? Complex{} : it->second;
  };

  const Complex v0 = lookup(0);
  if (std::abs(v0.imag()) > kRealityTol) throw RealityViolation(0, std::abs(v0.imag()));
  nonneg[0] = v0.real();

  for (long k = 1; k <= kmax; ++k) {
    const Complex plus = lookup(k);
    const Complex minus = lookup(-k);
    const double defect = std::abs(minus - std::conj(plus));
    if (defect > kRealityTol * std::max(1.0, std::abs(plus))) {
      throw RealityViolation(given.count(k) ? k : -k, defect);
    }
    nonneg[static_cast<std::size_t>(k)] = 0.5 * (plus + std::conj(minus));
  }
  return FourierSymbol(std::move(nonneg));
}

FourierSymbol FourierSymbol::constant(double a) { return FourierSymbol(std::vector<Complex>{a}); }

FourierSymbol FourierSymbol::cosine(double amplitude) {
  return FourierSymbol(std::vector<Complex>{0.0, 0.5 * amplitude});
}

void FourierSymbol::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex FourierSymbol::coeff(long k) const noexcept {
  const auto idx = static_cast<std::size_t>(std::labs(k));
  if (idx >= coeffs_.size()) return {};
  return k >= 0 ? coeffs_[idx] : std::conj(coeffs_[idx]);
}

// v(x) = V_0 + 2 Re Σ_{k>0} conj(V_k) e^{ikx}
double FourierSymbol::evaluate(double x) const noexcept {
  double sum = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    sum += (std::conj(coeffs_[k]) * std::polar(1.0, static_cast<double>(k) * x)).real();
  }
  return coeffs_[0].real() + 2.0 * sum;
}

double FourierSymbol::derivative(double x) const noexcept {
  double sum = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    sum += (Complex{0.0, kd} * std::conj(coeffs_[k]) * std::polar(1.0, kd * x)).real();
  }
  return 2.0 * sum;
}

double FourierSymbol::antiderivative(double x) const noexcept {
  double sum = 0.0;
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) {
    const double kd = static_cast<double>(k);
    const Complex c = std::conj(coeffs_[k]) / Complex{0.0, kd};
    sum += (c * (std::polar(1.0, kd * x) - 1.0)).real();
  }
  return coeffs_[0].real() * x + 2.0 * sum;
}

std::vector<FourierMode> FourierSymbol::modes() const {
  std::vector<FourierMode> out;
  const long kmax = max_mode();
  for (long k = -kmax; k <= kmax; ++k) {
    const Complex c = coeff(k);
    if (c != Complex{}) out.push_back({k, c});
  }
  return out;
}

double FourierSymbol::sup_norm_bound() const noexcept {
  double s = std::abs(coeffs_[0]);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) s += 2.0 * std::abs(coeffs_[k]);
  return s;
}

FourierSymbol FourierSymbol::operator-() const {
  std::vector<Complex> c = coeffs_;
  for (auto& z : c) z = -z;
  return FourierSymbol(std::move(c));
}

FourierSymbol FourierSymbol::shifted(double c) const {
  std::vector<Complex> out = coeffs_;
  out[0] += c;
  return FourierSymbol(std::move(out));
}

namespace {

double extremum(const FourierSymbol& v, std::size_t grid_size, double sign) {
  const auto min_grid = 4 * static_cast<std::size_t>(v.max_mode()) + 1;
  if (grid_size < min_grid) {
    throw std::invalid_argument("extremum grid needs at least 4K+1 = " +
                                std::to_string(min_grid) + " points");
  }
  const double h = kTwoPi / static_cast<double>(grid_size);
  std::vector<double> f(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) f[j] = sign * v.evaluate(h * static_cast<double>(j));
  const auto jmax = static_cast<std::size_t>(std::max_element(f.begin(), f.end()) - f.begin());
  const double fm = f[(jmax + grid_size - 1) % grid_size];
  const double f0 = f[jmax];
  const double fp = f[(jmax + 1) % grid_size];
  const double curvature = fm - 2.0 * f0 + fp;
  double best = f0;
  if (curvature < 0.0) {
    const double offset = 0.5 * (fm - fp) / curvature;
    if (std::abs(offset) <= 1.0) {
      best = std::max(best, sign * v.evaluate(h * (static_cast<double>(jmax) + offset)));
    }
  }
  return sign * best;
}

}  // namespace

double sup_estimate(const FourierSymbol& v, std::size_t grid_size) {
  return extremum(v, grid_size, 1.0);
}

double inf_estimate(const FourierSymbol& v, std::size_t grid_size) {
  return extremum(v, grid_size, -1.0);
}

double trapezoid_mean(const FourierSymbol& v, std::size_t n) {
  const double h = kTwoPi / static_cast<double>(n);
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) s += v.evaluate(h * static_cast<double>(j));
  return s / static_cast<double>(n);
}

FourierSymbol fit_symbol(std::span<const double> samples, double drop_below) {
  const std::size_t p = samples.size();
  if (p < 2) throw std::invalid_argument("fit_symbol needs at least two samples");
  std::vector<Complex> twiddle(p);
  for (std::size_t j = 0; j < p; ++j) {
    twiddle[j] = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(p));
  }
  const std::size_t kmax = (p - 1) / 2;
  std::vector<FourierMode> modes;
  for (std::size_t k = 0; k <= kmax; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < p; ++j) acc += samples[j] * twiddle[(j * k) % p];
    acc /= static_cast<double>(p);
    if (k == 0) {
      modes.push_back({0, acc.real()});
    } else if (std::abs(acc) > drop_below) {
      modes.push_back({static_cast<long>(k), acc});
      modes.push_back({-static_cast<long>(k), std::conj(acc)});
    }
  }
  return FourierSymbol::from_fourier(modes);
}

}  // namespace bospec
