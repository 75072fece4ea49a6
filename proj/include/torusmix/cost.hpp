#pragma once

#include <string>

namespace torusmix {

/// Transport cost sigma(z) as a function of torus distance z.
///   Log:    sigma(z) = ln z            (requires z > 0; exact disjoint supports)
///   LogEps: sigma(z) = ln(z+eps)-ln eps (finite and >= 0 for z >= 0)
///   Power:  sigma(z) = z^q, q in (0,1]; q = 1 is the identity cost (W1)
struct CostFunction {
  enum class Kind { Log, LogEps, Power };

  Kind kind = Kind::Power;
  double eps = 0.0;
  double q = 1.0;

  static CostFunction log_cost();
  static CostFunction log_eps(double eps);
  static CostFunction power(double q);
  static CostFunction w1() { return power(1.0); }

  double operator()(double z) const;
  bool finite_at_zero() const { return kind != Kind::Log; }
  std::string name() const;
};

}  // namespace torusmix
