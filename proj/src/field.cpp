#include "torusmix/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace torusmix {

double ScalarField::mean() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double ScalarField::variance() const {
  double s = 0.0;
  for (double v : values) s += v * v;
  return s / static_cast<double>(values.size());
}

double ScalarField::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

double ScalarField::max_value() const {
  return *std::max_element(values.begin(), values.end());
}

bool ScalarField::is_binary(double tol) const {
  for (double v : values)
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
  return true;
}

bool ScalarField::is_nonnegative() const {
  for (double v : values)
    if (v < 0.0) return false;
  return true;
}

void ScalarField::check_finite(const char* what) const {
  for (double v : values)
    if (!std::isfinite(v)) throw std::runtime_error(std::string(what) + ": non-finite value");
}

ScalarField ScalarField::shifted(int si, int sj) const {
  ScalarField out(grid);
  if (grid.dim == 1) {
    for (int i = 0; i < grid.n; ++i) out.at(i) = at(i - si);
  } else {
    for (int i = 0; i < grid.n; ++i)
      for (int j = 0; j < grid.n; ++j) out.at(i, j) = at(i - si, j - sj);
  }
  return out;
}

ScalarField coarsen(const ScalarField& f, int factor) {
  if (factor < 1) throw std::invalid_argument("coarsen: factor must be >= 1");
  if (factor == 1) return f;
  if (f.grid.n % factor != 0)
    throw std::invalid_argument("coarsen: factor must divide n");
  PeriodicGrid g = PeriodicGrid::make(f.grid.dim, f.grid.n / factor);
  ScalarField out(g);
  double inv = 1.0 / (f.grid.dim == 1 ? factor : factor * factor);
  if (f.grid.dim == 1) {
    for (int i = 0; i < g.n; ++i) {
      double s = 0.0;
      for (int a = 0; a < factor; ++a) s += f.at(i * factor + a);
      out.at(i) = s * inv;
    }
  } else {
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        double s = 0.0;
        for (int a = 0; a < factor; ++a)
          for (int b = 0; b < factor; ++b) s += f.at(i * factor + a, j * factor + b);
        out.at(i, j) = s * inv;
      }
  }
  return out;
}

double l1_distance(const ScalarField& a, const ScalarField& b) {
  if (a.grid != b.grid) throw std::invalid_argument("l1_distance: grid mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) s += std::abs(a.values[i] - b.values[i]);
  return s / static_cast<double>(a.values.size());
}

ScalarField DensityPair::recombine() const {
  ScalarField out(plus.grid);
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = mass_plus * plus.values[i] - mass_minus * minus.values[i] + m;
  return out;
}

DensityPair split_signed(const ScalarField& rho, double m) {
  if (m <= -1.0 || m >= 1.0) throw std::invalid_argument("split_signed: m must lie in (-1,1)");
  rho.check_finite("split_signed");
  if (std::abs(rho.mean() - m) > 1e-10)
    throw std::invalid_argument("split_signed: field mean differs from m by more than 1e-10");
  const std::size_t N = rho.values.size();
  ScalarField plus(rho.grid), minus(rho.grid);
  double zp = 0.0, zm = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double d = rho.values[i] - m;
    double p = d > 0.0 ? d : 0.0;
    double q = d < 0.0 ? -d : 0.0;
    plus.values[i] = p;
    minus.values[i] = q;
    zp += p;
    zm += q;
  }
  zp /= static_cast<double>(N);
  zm /= static_cast<double>(N);
  if (zp <= 0.0 || zm <= 0.0)
    throw std::invalid_argument("split_signed: a signed part has zero mass (field is uniform)");
  for (std::size_t i = 0; i < N; ++i) {
    plus.values[i] /= zp;
    minus.values[i] /= zm;
  }
  DensityPair pair;
  pair.plus = std::move(plus);
  pair.minus = std::move(minus);
  pair.mass_plus = zp;
  pair.mass_minus = zm;
  pair.m = m;
  return pair;
}

namespace {

// Bump kernel weights at cell-center offsets within radius R, unit mass.
struct BumpKernel {
  int m;  // offsets in [-m, m]
  std::vector<double> w;
};

BumpKernel bump_kernel(const PeriodicGrid& grid, double R) {
  BumpKernel k;
  k.m = static_cast<int>(std::floor(R / grid.h));
  if (k.m * grid.h >= R) --k.m;  // strict support |z| < R
  int width = 2 * k.m + 1;
  double total = 0.0;
  if (grid.dim == 1) {
    k.w.resize(width, 0.0);
    for (int o = -k.m; o <= k.m; ++o) {
      double z = o * grid.h / R;
      double v = std::exp(-1.0 / (1.0 - z * z));
      k.w[o + k.m] = v;
      total += v;
    }
  } else {
    k.w.assign(static_cast<std::size_t>(width) * width, 0.0);
    for (int a = -k.m; a <= k.m; ++a)
      for (int b = -k.m; b <= k.m; ++b) {
        double z2 = (a * a + b * b) * grid.h * grid.h / (R * R);
        if (z2 >= 1.0) continue;
        double v = std::exp(-1.0 / (1.0 - z2));
        k.w[static_cast<std::size_t>(a + k.m) * width + (b + k.m)] = v;
        total += v;
      }
  }
  for (double& v : k.w) v /= total;
  return k;
}

}  // namespace

ScalarField mollify(const ScalarField& rho, double R) {
  if (!(R > 0.0 && R < 0.5)) throw std::invalid_argument("mollify: R must lie in (0, 1/2)");
  if (R < 2.0 * rho.grid.h)
    throw std::invalid_argument("mollify: kernel under-resolved, need R >= 2h");
  const PeriodicGrid& g = rho.grid;
  BumpKernel k = bump_kernel(g, R);
  int width = 2 * k.m + 1;
  ScalarField out(g);
  if (g.dim == 1) {
    for (int i = 0; i < g.n; ++i) {
      double s = 0.0;
      for (int o = -k.m; o <= k.m; ++o) s += k.w[o + k.m] * rho.at(i - o);
      out.at(i) = s;
    }
  } else {
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        double s = 0.0;
        for (int a = -k.m; a <= k.m; ++a) {
          const double* wrow = &k.w[static_cast<std::size_t>(a + k.m) * width];
          for (int b = -k.m; b <= k.m; ++b) {
            double w = wrow[b + k.m];
            if (w != 0.0) s += w * rho.at(i - a, j - b);
          }
        }
        out.at(i, j) = s;
      }
  }
  return out;
}

}  // namespace torusmix
