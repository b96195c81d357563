#include "bospec/measure.hpp"

#include <algorithm>
#include <cmath>

namespace bospec {

double DiscreteMeasure::total_mass() const noexcept {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight;
  return s;
}

double DiscreteMeasure::moment(int p) const noexcept {
  double s = 0.0;
  for (const auto& a : atoms) s += a.weight * std::pow(a.location, p);
  return s;
}

double DiscreteMeasure::cumulative(double c) const noexcept {
  double s = 0.0;
  for (const auto& a : atoms) {
    if (a.location <= c) s += a.weight;
  }
  return s;
}

void DiscreteMeasure::sort_by_location() {
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& x, const Atom& y) { return x.location < y.location; });
}

}  // namespace bospec
