#include "torusmix/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace torusmix {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_divides(int k, int n) {
  if (k < 1) throw std::invalid_argument("generator: k must be positive");
  if (2 * k > n || n % (2 * k) != 0)
    throw std::invalid_argument("generator: 2k must divide n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + ")");
}

// Stripe sign at cell index i along the striped axis: +1 on the first
// stripe of width n/(2k).
int stripe_sign(int i, int k, int n) {
  int band = i * 2 * k / n;
  return band % 2 == 0 ? +1 : -1;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Deterministic per-mode (amp, phase) draw; independent of grid resolution.
void mode_draw(std::uint64_t seed, int kx, int ky, double& amp, double& phase) {
  std::uint64_t s = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(kx + 4096) * 0x10001ULL +
                                                 static_cast<std::uint64_t>(ky + 4096)));
  double u1 = to_unit(splitmix64(s));
  double u2 = to_unit(splitmix64(s + 1));
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  amp = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  phase = kTwoPi * to_unit(splitmix64(s + 2));
}

}  // namespace

ScalarField make_stripes(const PeriodicGrid& grid, int k, int axis) {
  require_divides(k, grid.n);
  if (axis < 0 || axis >= grid.dim)
    throw std::invalid_argument("make_stripes: axis out of range");
  ScalarField f(grid);
  if (grid.dim == 1) {
    for (int i = 0; i < grid.n; ++i) f.at(i) = stripe_sign(i, k, grid.n);
  } else {
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j)
        f.at(i, j) = stripe_sign(axis == 0 ? i : j, k, grid.n);
  }
  return f;
}

ScalarField make_checkerboard(const PeriodicGrid& grid, int k) {
  if (grid.dim != 2) throw std::invalid_argument("make_checkerboard: requires d=2");
  require_divides(k, grid.n);
  ScalarField f(grid);
  for (int i = 0; i < grid.n; ++i)
    for (int j = 0; j < grid.n; ++j) {
      int parity = (i * 2 * k / grid.n + j * 2 * k / grid.n) % 2;
      f.at(i, j) = parity == 0 ? +1.0 : -1.0;
    }
  return f;
}

double BandLimitedField::eval(double x, double y) const {
  double s = offset;
  for (const Mode& m : modes) s += m.amp * std::cos(kTwoPi * (m.kx * x + m.ky * y) + m.phase);
  return s;
}

std::array<double, 2> BandLimitedField::grad(double x, double y) const {
  double gx = 0.0, gy = 0.0;
  for (const Mode& m : modes) {
    double t = -m.amp * kTwoPi * std::sin(kTwoPi * (m.kx * x + m.ky * y) + m.phase);
    gx += m.kx * t;
    gy += m.ky * t;
  }
  return {gx, gy};
}

ScalarField BandLimitedField::sample(const PeriodicGrid& grid) const {
  ScalarField f(grid);
  if (grid.dim == 1) {
    for (int i = 0; i < grid.n; ++i) f.at(i) = eval(grid.center(i));
  } else {
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j) f.at(i, j) = eval(grid.center(i), grid.center(j));
  }
  return f;
}

ScalarField BandLimitedField::sample_grad_norm(const PeriodicGrid& grid) const {
  ScalarField f(grid);
  if (grid.dim == 1) {
    for (int i = 0; i < grid.n; ++i) f.at(i) = std::abs(grad(grid.center(i))[0]);
  } else {
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j) {
        auto g = grad(grid.center(i), grid.center(j));
        f.at(i, j) = std::hypot(g[0], g[1]);
      }
  }
  return f;
}

BandLimitedField make_band_limited(int dim, std::uint64_t seed, int cutoff_mode) {
  if (cutoff_mode < 1) throw std::invalid_argument("make_band_limited: cutoff must be >= 1");
  BandLimitedField f;
  f.dim = dim;
  if (dim == 1) {
    for (int k = 1; k <= cutoff_mode; ++k) {
      Mode m;
      m.kx = k;
      mode_draw(seed, k, 0, m.amp, m.phase);
      f.modes.push_back(m);
    }
  } else {
    // Half-plane of wave vectors: one representative per cosine mode.
    for (int kx = 0; kx <= cutoff_mode; ++kx)
      for (int ky = -cutoff_mode; ky <= cutoff_mode; ++ky) {
        if (kx == 0 && ky <= 0) continue;
        Mode m;
        m.kx = kx;
        m.ky = ky;
        mode_draw(seed, kx, ky, m.amp, m.phase);
        f.modes.push_back(m);
      }
  }
  double norm = 1.0 / std::sqrt(static_cast<double>(f.modes.size()));
  for (Mode& m : f.modes) m.amp *= norm;
  return f;
}

ScalarField make_random_nonnegative(const PeriodicGrid& grid, std::uint64_t seed, int cutoff_mode) {
  ScalarField f = make_band_limited(grid.dim, seed, cutoff_mode).sample(grid);
  double lo = f.min_value();
  for (double& v : f.values) v -= lo;
  return f;
}

ScalarField make_random_binary(const PeriodicGrid& grid, std::uint64_t seed, int cutoff_mode) {
  if (2 * cutoff_mode >= grid.n)
    throw std::invalid_argument("make_random_binary: cutoff_mode must be < n/2");
  ScalarField f = make_band_limited(grid.dim, seed, cutoff_mode).sample(grid);
  const std::size_t N = f.values.size();
  std::vector<std::size_t> order(N);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return f.values[a] < f.values[b]; });
  // Median split: the lower half goes to -1, so the mean is zero for even
  // cell counts; ties resolve by index which plays the role of flipping the
  // cells nearest the threshold.
  ScalarField out(grid);
  for (std::size_t r = 0; r < N; ++r) out.values[order[r]] = r < N / 2 ? -1.0 : +1.0;
  return out;
}

}  // namespace torusmix
