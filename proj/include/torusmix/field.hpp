#pragma once

#include <vector>

#include "torusmix/grid.hpp"

namespace torusmix {

/// Cell-centered scalar samples on a PeriodicGrid. Values are immutable by
/// convention once a field leaves its constructor; all operations return
/// fresh fields.
struct ScalarField {
  PeriodicGrid grid;
  std::vector<double> values;

  ScalarField() = default;
  ScalarField(const PeriodicGrid& g, double fill = 0.0)
      : grid(g), values(g.size(), fill) {}

  double& at(int i, int j = 0) { return values[grid.index(i, j)]; }
  double at(int i, int j = 0) const { return values[grid.index(i, j)]; }

  double mean() const;
  /// Cell average of rho^2 (the squared L2 norm; equals 1 for binary fields).
  double variance() const;
  double min_value() const;
  double max_value() const;
  bool is_binary(double tol = 1e-12) const;
  bool is_nonnegative() const;
  /// Throws if any value is NaN or infinite.
  void check_finite(const char* what = "field") const;

  ScalarField shifted(int si, int sj = 0) const;
};

/// Block-average aggregation by an integer factor (factor | n).
ScalarField coarsen(const ScalarField& f, int factor);

/// Cell-averaged L1 distance between fields on the same grid.
double l1_distance(const ScalarField& a, const ScalarField& b);

/// Normalized positive/negative parts of rho - m. `plus` and `minus` are
/// probability densities; mass_plus/mass_minus are the cell averages of
/// (rho-m)_+ and (rho-m)_- so that
///   mass_plus*plus - mass_minus*minus + m == rho   (pointwise).
struct DensityPair {
  ScalarField plus;
  ScalarField minus;
  double mass_plus = 0.0;
  double mass_minus = 0.0;
  double m = 0.0;

  ScalarField recombine() const;
};

DensityPair split_signed(const ScalarField& rho, double m);

/// Periodic convolution with the standard radial bump of radius R,
/// discretized on cell centers and renormalized to unit mass.
ScalarField mollify(const ScalarField& rho, double R);

}  // namespace torusmix
