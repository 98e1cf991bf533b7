#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "iqc/types.hpp"

namespace iqc {

// Truncated click-index range [index_min, index_max] with spacing tau.
// Tick values are always recomputed as n*tau, never accumulated, so that
// tick(-n) == -tick(n) holds bit for bit.
class ClockGrid {
 public:
  ClockGrid(Real tau, std::int64_t index_min, std::int64_t index_max)
      : tau_(tau), min_(index_min), max_(index_max) {
    if (!(tau > 0)) throw std::invalid_argument("grid: tau must be positive");
    if (min_ > 0 || max_ < 0)
      throw std::invalid_argument("grid: range must contain 0");
  }

  Real tau() const { return tau_; }
  std::int64_t index_min() const { return min_; }
  std::int64_t index_max() const { return max_; }
  std::int64_t size() const { return max_ - min_ + 1; }

  bool contains(std::int64_t n) const { return n >= min_ && n <= max_; }
  Real tick(std::int64_t n) const { return static_cast<Real>(n) * tau_; }

  // Dense storage slot for index n.
  std::int64_t slot(std::int64_t n) const {
    if (!contains(n))
      throw std::out_of_range("grid: index " + std::to_string(n) +
                              " outside [" + std::to_string(min_) + ", " +
                              std::to_string(max_) + "]");
    return n - min_;
  }
  std::int64_t index_at(std::int64_t slot) const { return min_ + slot; }

  // Width of the outermost band on each side used by boundary diagnostics
  // (10% of the range, at least one index).
  std::int64_t boundary_band() const {
    std::int64_t b = size() / 10;
    return b > 0 ? b : 1;
  }
  bool in_boundary_band(std::int64_t n) const {
    std::int64_t b = boundary_band();
    return n < min_ + b || n > max_ - b;
  }

  // Distance to the nearest range edge, 1 for an edge index itself.
  std::int64_t edge_distance(std::int64_t n) const {
    std::int64_t d = std::min(max_ - n, n - min_);
    return d + 1;
  }

  bool operator==(const ClockGrid& o) const {
    return tau_ == o.tau_ && min_ == o.min_ && max_ == o.max_;
  }

 private:
  Real tau_;
  std::int64_t min_, max_;
};

}  // namespace iqc
