#pragma once

#include <cstdint>
#include <vector>

#include "torusmix/field.hpp"

namespace torusmix {

/// +1/-1 stripes of width 1/(2k) along the given axis; requires 2k | n.
ScalarField make_stripes(const PeriodicGrid& grid, int k, int axis = 0);

/// k x k full periods of the +1/-1 checkerboard; d=2 only, requires 2k | n.
ScalarField make_checkerboard(const PeriodicGrid& grid, int k);

/// Band-limited random field with modes |k|_inf <= cutoff. Coefficients are
/// derived per-mode from the seed, so the continuum field is independent of
/// the grid it is later sampled on.
struct BandLimitedField {
  struct Mode {
    int kx = 0;
    int ky = 0;
    double amp = 0.0;
    double phase = 0.0;
  };
  int dim = 1;
  std::vector<Mode> modes;
  double offset = 0.0;

  double eval(double x, double y = 0.0) const;
  std::array<double, 2> grad(double x, double y = 0.0) const;
  ScalarField sample(const PeriodicGrid& grid) const;
  /// |grad f| sampled on cell centers (analytic, exact for band-limited f).
  ScalarField sample_grad_norm(const PeriodicGrid& grid) const;
};

BandLimitedField make_band_limited(int dim, std::uint64_t seed, int cutoff_mode);

/// Nonnegative band-limited sample: f - min f on the grid.
ScalarField make_random_nonnegative(const PeriodicGrid& grid, std::uint64_t seed, int cutoff_mode);

/// Thresholds a band-limited field at its median cell value; exactly
/// mean-zero for even cell counts. Requires cutoff_mode < n/2.
ScalarField make_random_binary(const PeriodicGrid& grid, std::uint64_t seed, int cutoff_mode);

}  // namespace torusmix
