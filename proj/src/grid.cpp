#include "torusmix/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace torusmix {

PeriodicGrid PeriodicGrid::make(int dim, int n) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("PeriodicGrid: dim must be 1 or 2, got " + std::to_string(dim));
  if (n < 4)
    throw std::invalid_argument("PeriodicGrid: n must be >= 4, got " + std::to_string(n));
  PeriodicGrid g;
  g.dim = dim;
  g.n = n;
  g.h = 1.0 / n;
  return g;
}

double torus_distance_1d(double x, double y) {
  double d = std::abs(x - y);
  return std::min(d, 1.0 - d);
}

double torus_distance(const std::array<double, 2>& x, const std::array<double, 2>& y, int dim) {
  if (dim == 1) return torus_distance_1d(x[0], y[0]);
  double dx = torus_distance_1d(x[0], y[0]);
  double dy = torus_distance_1d(x[1], y[1]);
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace torusmix
