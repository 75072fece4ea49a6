#include "torusmix/cost.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace torusmix {

CostFunction CostFunction::log_cost() {
  CostFunction c;
  c.kind = Kind::Log;
  return c;
}

CostFunction CostFunction::log_eps(double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("CostFunction::log_eps: eps must be > 0");
  CostFunction c;
  c.kind = Kind::LogEps;
  c.eps = eps;
  return c;
}

CostFunction CostFunction::power(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("CostFunction::power: q must be in (0,1]");
  CostFunction c;
  c.kind = Kind::Power;
  c.q = q;
  return c;
}

double CostFunction::operator()(double z) const {
  switch (kind) {
    case Kind::Log:
      if (z <= 0.0) return -std::numeric_limits<double>::infinity();
      return std::log(z);
    case Kind::LogEps:
      return std::log(z + eps) - std::log(eps);
    case Kind::Power:
      return q == 1.0 ? z : std::pow(z, q);
  }
  return 0.0;
}

std::string CostFunction::name() const {
  switch (kind) {
    case Kind::Log:
      return "log";
    case Kind::LogEps:
      return "logeps:" + std::to_string(eps);
    case Kind::Power:
      return q == 1.0 ? "w1" : "power:" + std::to_string(q);
  }
  return "?";
}

}  // namespace torusmix
