#include "bospec/profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bospec/errors.hpp"

namespace bospec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Weights w_j = Π_i (m_j - M_i) / Π_{i≠j} (m_j - m_i), accumulated as a
// product of ratios to stay in range for long lists.
std::vector<double> residues(const Profile& p) {
  const std::size_t n = p.maxima.size();
  std::vector<double> w(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double m = p.minima[j];
    double value = 1.0;
    std::size_t i_max = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == j) continue;
      value /= (m - p.minima[i]);
      if (i_max < n) value *= (m - p.maxima[i_max++]);
    }
    w[j] = value;
  }
  return w;
}

}  // namespace

Profile Profile::absolute(double a) { return Profile{a, {}, {a}, false}; }

Profile Profile::from_extrema(std::vector<double> minima, std::vector<double> maxima) {
  Profile p;
  p.minima = std::move(minima);
  p.maxima = std::move(maxima);
  check_interlacing(p, true);
  for (double m : p.minima) p.center += m;
  for (double m : p.maxima) p.center -= m;
  return p;
}

double Profile::evaluate(double c) const {
  if (minima.size() != maxima.size() + 1) throw std::invalid_argument("profile shape is incomplete");
  double f = 0.0;
  for (double m : minima) f += std::abs(c - m);
  for (double m : maxima) f -= std::abs(c - m);
  return f;
}

double Profile::rayleigh(double c) const {
  double f = 0.0;
  for (double m : minima) f += (m <= c) ? 1.0 : 0.0;
  for (double m : maxima) f -= (m <= c) ? 1.0 : 0.0;
  return f;
}

void check_interlacing(const Profile& p, bool strict) {
  if (p.minima.size() != p.maxima.size() + 1) {
    std::ostringstream os;
    os << "profile needs one more minimum than maxima (got " << p.minima.size() << " and "
       << p.maxima.size() << ")";
    throw InterlacingViolation(os.str());
  }
  // Merge into S_0↑, S_1↓, S_1↑, S_2↓, ... which must be decreasing.
  std::vector<double> chain;
  chain.reserve(p.minima.size() + p.maxima.size());
  for (std::size_t i = 0; i < p.minima.size(); ++i) {
    if (i > 0) chain.push_back(p.maxima[i - 1]);
    chain.push_back(p.minima[i]);
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const bool ok = strict ? chain[i] < chain[i - 1] : chain[i] <= chain[i - 1];
    if (!ok) {
      std::ostringstream os;
      os << "profile extrema do not interlace at position " << i << " (" << chain[i - 1] << ", "
         << chain[i] << ")";
      throw InterlacingViolation(os.str());
    }
  }
}

Profile profile_from_spectra(const InterlacedSpectra& s, double mean, double delta_gap) {
  if (!s.interlacing_checked) throw std::invalid_argument("spectra have not been interlacing-checked");
  Profile p;
  p.center = mean;
  p.truncated = true;
  p.minima.push_back(s.up.front());
  for (std::size_t h = 1; h < s.up.size(); ++h) {
    const double lo = s.up[h];
    const double hi = s.down[h - 1];
    if (hi - lo < delta_gap) continue;
    p.maxima.push_back(hi);
    p.minima.push_back(lo);
  }
  return p;
}

std::vector<std::pair<double, double>> gaps(const Profile& p) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < p.maxima.size(); ++i) out.emplace_back(p.minima[i + 1], p.maxima[i]);
  return out;
}

std::vector<std::pair<double, double>> bands(const Profile& p) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < p.maxima.size(); ++i) out.emplace_back(p.maxima[i], p.minima[i]);
  return out;
}

std::vector<double> band_midpoints(const Profile& p) {
  std::vector<double> out;
  for (const auto& [lo, hi] : bands(p)) out.push_back(0.5 * (lo + hi));
  return out;
}

Complex t_up_observable(const Profile& p, Complex u) {
  if (u.imag() == 0.0) throw std::invalid_argument("T-up observable needs u off the real axis");
  if (p.minima.size() != p.maxima.size() + 1) throw std::invalid_argument("profile shape is incomplete");
  for (double m : p.minima) {
    if (std::abs(u - m) < 1e-12) throw PoleError("evaluation point lies on a recorded minimum");
  }
  Complex value{1.0, 0.0};
  for (std::size_t i = 0; i < p.maxima.size(); ++i) value *= (u - p.maxima[i]) / (u - p.minima[i]);
  return value / (u - p.minima.back());
}

DiscreteMeasure transition_measure(const Profile& p) {
  if (p.truncated) throw std::invalid_argument("transition measure needs a complete profile");
  check_interlacing(p, true);
  const std::vector<double> w = residues(p);
  DiscreteMeasure mu;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!(w[j] > 0.0)) throw InterlacingViolation("transition measure weight is not positive");
    mu.atoms.push_back({p.minima[j], w[j]});
  }
  mu.sort_by_location();
  return mu;
}

Profile profile_from_measure(const DiscreteMeasure& mu) {
  if (mu.atoms.empty()) throw std::invalid_argument("measure has no atoms");
  if (std::abs(mu.total_mass() - 1.0) > 1e-10) throw std::invalid_argument("measure is not normalized");
  DiscreteMeasure sorted = mu;
  sorted.sort_by_location();
  for (std::size_t j = 0; j < sorted.atoms.size(); ++j) {
    if (!(sorted.atoms[j].weight > 0.0)) throw std::invalid_argument("measure weights must be positive");
    if (j > 0 && !(sorted.atoms[j].location > sorted.atoms[j - 1].location)) {
      throw std::invalid_argument("measure atoms must be distinct");
    }
  }
  auto stieltjes = [&](double c) {
    double g = 0.0;
    for (const auto& a : sorted.atoms) g += a.weight / (c - a.location);
    return g;
  };

  std::vector<double> minima;
  std::vector<double> maxima;
  for (auto it = sorted.atoms.rbegin(); it != sorted.atoms.rend(); ++it) minima.push_back(it->location);
  // G decreases from +∞ to -∞ between consecutive atoms.
  for (std::size_t j = 0; j + 1 < minima.size(); ++j) {
    double lo = minima[j + 1];
    double hi = minima[j];
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (stieltjes(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    maxima.push_back(0.5 * (lo + hi));
  }
  return Profile::from_extrema(std::move(minima), std::move(maxima));
}

MomentReport moments_and_logmoments(const Profile& p, int pmax) {
  if (pmax < 0 || pmax > 20) throw std::invalid_argument("pmax must lie in [0, 20]");
  check_interlacing(p, false);
  const std::vector<double> w = residues(p);
  const auto order = static_cast<std::size_t>(pmax);

  MomentReport r;
  r.transition_moments.assign(order + 1, 0.0);
  for (std::size_t j = 0; j < w.size(); ++j) {
    double power = 1.0;
    for (std::size_t l = 0; l <= order; ++l) {
      r.transition_moments[l] += w[j] * power;
      power *= p.minima[j];
    }
  }

  r.log_moments.assign(order + 1, 0.0);
  for (std::size_t k = 1; k <= order; ++k) {
    double sum = 0.0;
    for (double m : p.minima) sum += std::pow(m, static_cast<int>(k));
    for (double m : p.maxima) sum -= std::pow(m, static_cast<int>(k));
    r.log_moments[k] = sum;
  }

  // exp(Σ O_k z^k / k) = Σ E_ℓ z^ℓ with ℓ E_ℓ = Σ_{k=1}^ℓ O_k E_{ℓ-k}.
  r.series_coefficients.assign(order + 1, 0.0);
  r.series_coefficients[0] = 1.0;
  for (std::size_t l = 1; l <= order; ++l) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= l; ++k) acc += r.log_moments[k] * r.series_coefficients[l - k];
    r.series_coefficients[l] = acc / static_cast<double>(l);
  }
  for (std::size_t l = 0; l <= order; ++l) {
    r.series_error = std::max(r.series_error, std::abs(r.series_coefficients[l] - r.transition_moments[l]));
  }
  return r;
}

// ---------------------------------------------------------------------------
// ConvexProfile

ConvexProfile ConvexProfile::from_symbol(const FourierSymbol& v, std::size_t grid) {
  if (grid < 256) throw std::invalid_argument("convex profile grid must be at least 256");
  ConvexProfile out;
  out.exact_ = true;
  out.symbol_ = v;
  out.center_ = v.mean();
  out.samples_.resize(grid);
  for (std::size_t j = 0; j < grid; ++j) out.samples_[j] = v.evaluate(kTwoPi * j / grid);

  if (v.max_mode() == 0) {
    out.lower_ = out.upper_ = v.mean();
    return out;
  }
  // Critical points from sign changes of v' on a grid fine enough to separate them.
  const std::size_t g = std::max<std::size_t>(grid, 64 * static_cast<std::size_t>(v.max_mode()));
  const double h = kTwoPi / static_cast<double>(g);
  std::vector<double> d(g);
  for (std::size_t j = 0; j < g; ++j) d[j] = v.derivative(h * j);
  for (std::size_t j = 0; j < g; ++j) {
    const double a = d[j];
    const double b = d[(j + 1) % g];
    if (a == 0.0) {
      out.critical_.push_back(h * j);
      continue;
    }
    if ((a < 0.0) == (b < 0.0) || b == 0.0) continue;
    double lo = h * j;
    double hi = lo + h;
    const bool rising = a < 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if ((v.derivative(mid) < 0.0) == rising) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    out.critical_.push_back(std::fmod(0.5 * (lo + hi), kTwoPi));
  }
  std::sort(out.critical_.begin(), out.critical_.end());
  out.lower_ = out.upper_ = v.evaluate(out.critical_.empty() ? 0.0 : out.critical_.front());
  for (double x : out.critical_) {
    out.lower_ = std::min(out.lower_, v.evaluate(x));
    out.upper_ = std::max(out.upper_, v.evaluate(x));
  }
  return out;
}

ConvexProfile ConvexProfile::from_samples(std::vector<double> samples) {
  if (samples.size() < 256) throw std::invalid_argument("convex profile needs at least 256 samples");
  ConvexProfile out;
  out.samples_ = std::move(samples);
  double sum = 0.0;
  for (double s : out.samples_) sum += s;
  out.center_ = sum / static_cast<double>(out.samples_.size());
  const auto [lo, hi] = std::minmax_element(out.samples_.begin(), out.samples_.end());
  out.lower_ = *lo;
  out.upper_ = *hi;
  return out;
}

std::pair<double, double> ConvexProfile::sublevel(double c) const {
  if (!exact_) {
    double measure = 0.0;
    double excess = 0.0;
    for (double s : samples_) {
      if (s <= c) {
        measure += 1.0;
        excess += c - s;
      }
    }
    const auto n = static_cast<double>(samples_.size());
    return {measure / n, excess / n};
  }
  if (critical_.empty()) {
    return c >= center_ ? std::pair{1.0, c - center_} : std::pair{0.0, 0.0};
  }
  const FourierSymbol& v = symbol_;
  double measure = 0.0;
  double integral = 0.0;  // ∫ (c - v) over {v <= c}
  auto add = [&](double a, double b) {
    measure += b - a;
    integral += c * (b - a) - (v.antiderivative(b) - v.antiderivative(a));
  };
  const std::size_t m = critical_.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double a = critical_[i];
    const double b = (i + 1 < m) ? critical_[i + 1] : critical_[0] + kTwoPi;
    const double va = v.evaluate(a);
    const double vb = v.evaluate(b);
    const bool a_in = va <= c;
    const bool b_in = vb <= c;
    if (a_in && b_in) {
      add(a, b);
      continue;
    }
    if (!a_in && !b_in) continue;
    // v is monotone on [a, b]; bisect for the crossing.
    double lo = a;
    double hi = b;
    for (int iter = 0; iter < 100; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if ((v.evaluate(mid) <= c) == a_in) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double root = 0.5 * (lo + hi);
    if (a_in) {
      add(a, root);
    } else {
      add(root, b);
    }
  }
  return {measure / kTwoPi, integral / kTwoPi};
}

double ConvexProfile::rayleigh(double c) const {
  if (c < lower_) return 0.0;
  if (c >= upper_) return 1.0;
  return std::clamp(sublevel(c).first, 0.0, 1.0);
}

double ConvexProfile::evaluate(double c) const {
  // ∫|c - v| = 2∫(c - v)_+ - ∫(c - v)
  if (c >= upper_) return c - center_;
  if (c <= lower_) return center_ - c;
  return 2.0 * sublevel(c).second - (c - center_);
}

Complex ConvexProfile::t_up_observable(Complex u) const {
  if (u.imag() == 0.0) throw std::invalid_argument("T-up observable needs u off the real axis");
  Complex acc{};
  for (double s : samples_) acc -= std::log(u - s);
  return std::exp(acc / static_cast<double>(samples_.size()));
}

}  // namespace bospec
