#pragma once

#include <limits>

namespace frechet {

// Certified enclosure of a distance: the true value lies in [lo, hi].
struct ApproxInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double value) const { return lo <= value && value <= hi; }
  // hi / lo; 1 for the degenerate [0, 0], infinite for [0, hi > 0].
  double ratio() const {
    if (lo > 0.0) return hi / lo;
    return hi == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }

  friend bool operator==(const ApproxInterval&, const ApproxInterval&) = default;
};

}  // namespace frechet
