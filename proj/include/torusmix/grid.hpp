#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace torusmix {

/// Uniform cell-centered grid on the unit torus [0,1)^d, d in {1,2}.
/// Cell centers sit at (i + 1/2) h so that binary patterns with
/// interfaces on cell boundaries never sample an interface point.
struct PeriodicGrid {
  int dim = 1;
  int n = 0;
  double h = 0.0;

  static PeriodicGrid make(int dim, int n);

  std::size_t size() const {
    return dim == 1 ? static_cast<std::size_t>(n)
                    : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }

  int wrap(int i) const {
    int r = i % n;
    return r < 0 ? r + n : r;
  }

  /// Row-major flat index; for d=1 the second index is ignored.
  std::size_t index(int i, int j = 0) const {
    if (dim == 1) return static_cast<std::size_t>(wrap(i));
    return static_cast<std::size_t>(wrap(i)) * n + wrap(j);
  }

  double center(int i) const { return (i + 0.5) * h; }

  std::array<double, 2> center_of(std::size_t flat) const {
    if (dim == 1) return {center(static_cast<int>(flat)), 0.0};
    return {center(static_cast<int>(flat / n)), center(static_cast<int>(flat % n))};
  }

  bool operator==(const PeriodicGrid&) const = default;
};

/// Geodesic distance on the unit torus (per-axis wraparound, Euclidean norm).
double torus_distance_1d(double x, double y);
double torus_distance(const std::array<double, 2>& x, const std::array<double, 2>& y, int dim);

}  // namespace torusmix
