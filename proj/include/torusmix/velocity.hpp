#pragma once

#include <functional>

namespace torusmix {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Mat2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  double trace() const { return a11 + a22; }
  /// Operator 2-norm (largest singular value).
  double spectral_norm() const;
};

/// Analytic, time-dependent velocity field on the torus. `jacobian` must be
/// the exact spatial gradient; divergence-free protocols keep its trace at 0.
struct VelocityField {
  std::function<Vec2(double t, Vec2 x)> eval;
  std::function<Mat2(double t, Vec2 x)> jacobian;
  double speed_bound = 0.0;
  /// Optional closed form for ||grad u(t,.)||_{L^p}; null when unavailable.
  std::function<double(double t, double p)> closed_form_lp_grad;
};

}  // namespace torusmix
