#pragma once

#include <vector>

namespace bospec {

struct Atom {
  double location = 0.0;
  double weight = 0.0;
};

/// Finite signed sum of point masses.
///
/// Used for transition measures (positive weights, total mass 1), Rayleigh
/// measures (weights ±1), and the jump measure dξ of a spectral shift function.
struct DiscreteMeasure {
  std::vector<Atom> atoms;

  double total_mass() const noexcept;
  /// ∫ c^p dμ
  double moment(int p) const noexcept;
  /// Right-continuous distribution function μ((-∞, c]).
  double cumulative(double c) const noexcept;
  void sort_by_location();
};

}  // namespace bospec
