#include "torusmix/norms.hpp"

#include <fftw3.h>

#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace torusmix {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// FFTW planning is not thread-safe; executing independent plans is.
std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

int signed_wavenumber(int j, int n) { return j <= n / 2 ? j : j - n; }

}  // namespace

std::vector<std::complex<double>> dft(const ScalarField& f) {
  const int n = f.grid.n;
  const std::size_t N = f.grid.size();
  std::vector<std::complex<double>> in(N), out(N);
  for (std::size_t i = 0; i < N; ++i) in[i] = f.values[i];
  {
    std::lock_guard<std::mutex> lock(fftw_mutex());
    fftw_plan plan =
        f.grid.dim == 1
            ? fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                               reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                               FFTW_ESTIMATE)
            : fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(in.data()),
                               reinterpret_cast<fftw_complex*>(out.data()), FFTW_FORWARD,
                               FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  double scale = 1.0 / static_cast<double>(N);
  for (auto& c : out) c *= scale;
  return out;
}

double hminus1(const ScalarField& rho) {
  rho.check_finite("hminus1");
  if (std::abs(rho.mean()) > 1e-10)
    throw std::invalid_argument("hminus1: field must be mean-zero (H^-1 is infinite otherwise)");
  const int n = rho.grid.n;
  auto coef = dft(rho);
  double sum = 0.0;
  if (rho.grid.dim == 1) {
    for (int j = 1; j < n; ++j) {
      int k = signed_wavenumber(j, n);
      sum += std::norm(coef[j]) / (kTwoPi * kTwoPi * k * k);
    }
  } else {
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2) {
        if (j1 == 0 && j2 == 0) continue;
        int k1 = signed_wavenumber(j1, n);
        int k2 = signed_wavenumber(j2, n);
        double k2sum = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
        sum += std::norm(coef[static_cast<std::size_t>(j1) * n + j2]) / (kTwoPi * kTwoPi * k2sum);
      }
  }
  return std::sqrt(sum);
}

double bv_seminorm(const ScalarField& rho) {
  rho.check_finite("bv_seminorm");
  const PeriodicGrid& g = rho.grid;
  if (rho.is_binary()) {
    // Interface counting: each sign-change face contributes jump 2 x h^{d-1}.
    std::size_t faces = 0;
    auto sgn = [](double v) { return v > 0.0; };
    if (g.dim == 1) {
      for (int i = 0; i < g.n; ++i)
        if (sgn(rho.at(i)) != sgn(rho.at(i + 1))) ++faces;
      return 2.0 * static_cast<double>(faces);
    }
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        if (sgn(rho.at(i, j)) != sgn(rho.at(i + 1, j))) ++faces;
        if (sgn(rho.at(i, j)) != sgn(rho.at(i, j + 1))) ++faces;
      }
    return 2.0 * static_cast<double>(faces) * g.h;
  }
  // Smooth rule: centered differences, cell quadrature.
  double sum = 0.0;
  double inv2h = 1.0 / (2.0 * g.h);
  if (g.dim == 1) {
    for (int i = 0; i < g.n; ++i) sum += std::abs((rho.at(i + 1) - rho.at(i - 1)) * inv2h);
  } else {
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        double gx = (rho.at(i + 1, j) - rho.at(i - 1, j)) * inv2h;
        double gy = (rho.at(i, j + 1) - rho.at(i, j - 1)) * inv2h;
        sum += std::hypot(gx, gy);
      }
  }
  return sum / static_cast<double>(g.size());
}

double gl_energy(const ScalarField& rho) {
  rho.check_finite("gl_energy");
  if (rho.min_value() < -1.5 || rho.max_value() > 1.5)
    throw std::invalid_argument("gl_energy: values outside [-1.5, 1.5]");
  const PeriodicGrid& g = rho.grid;
  double inv2h = 1.0 / (2.0 * g.h);
  double sum = 0.0;
  if (g.dim == 1) {
    for (int i = 0; i < g.n; ++i) {
      double gx = (rho.at(i + 1) - rho.at(i - 1)) * inv2h;
      double v = rho.at(i);
      double w = 1.0 - v * v;
      sum += 0.5 * gx * gx + 0.5 * w * w;
    }
  } else {
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        double gx = (rho.at(i + 1, j) - rho.at(i - 1, j)) * inv2h;
        double gy = (rho.at(i, j + 1) - rho.at(i, j - 1)) * inv2h;
        double v = rho.at(i, j);
        double w = 1.0 - v * v;
        sum += 0.5 * (gx * gx + gy * gy) + 0.5 * w * w;
      }
  }
  return sum / static_cast<double>(g.size());
}

double variance(const ScalarField& rho) { return rho.variance(); }

NormReport compute_norms(const ScalarField& rho) {
  NormReport r;
  r.hminus1 = hminus1(rho);
  r.bv = bv_seminorm(rho);
  r.variance = rho.variance();
  r.gl_energy = gl_energy(rho);
  return r;
}

ScalarField spectral_gradient_norm(const ScalarField& f) {
  const int n = f.grid.n;
  const std::size_t N = f.grid.size();
  auto coef = dft(f);
  auto inverse = [&](std::vector<std::complex<double>>& spec) {
    std::vector<std::complex<double>> out(N);
    {
      std::lock_guard<std::mutex> lock(fftw_mutex());
      fftw_plan plan =
          f.grid.dim == 1
              ? fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(spec.data()),
                                 reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
                                 FFTW_ESTIMATE)
              : fftw_plan_dft_2d(n, n, reinterpret_cast<fftw_complex*>(spec.data()),
                                 reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
                                 FFTW_ESTIMATE);
      fftw_execute(plan);
      fftw_destroy_plan(plan);
    }
    return out;
  };

  ScalarField result(f.grid);
  std::complex<double> I(0.0, 1.0);
  if (f.grid.dim == 1) {
    std::vector<std::complex<double>> dx(N);
    for (int j = 0; j < n; ++j) {
      int k = signed_wavenumber(j, n);
      if (2 * std::abs(k) == n) k = 0;  // drop the unpaired Nyquist mode
      dx[j] = coef[j] * (I * (kTwoPi * k));
    }
    auto gx = inverse(dx);
    for (std::size_t i = 0; i < N; ++i) result.values[i] = std::abs(gx[i].real());
  } else {
    std::vector<std::complex<double>> dx(N), dy(N);
    for (int j1 = 0; j1 < n; ++j1)
      for (int j2 = 0; j2 < n; ++j2) {
        int k1 = signed_wavenumber(j1, n);
        int k2 = signed_wavenumber(j2, n);
        if (2 * std::abs(k1) == n) k1 = 0;
        if (2 * std::abs(k2) == n) k2 = 0;
        std::size_t id = static_cast<std::size_t>(j1) * n + j2;
        dx[id] = coef[id] * (I * (kTwoPi * k1));
        dy[id] = coef[id] * (I * (kTwoPi * k2));
      }
    auto gx = inverse(dx);
    auto gy = inverse(dy);
    for (std::size_t i = 0; i < N; ++i)
      result.values[i] = std::hypot(gx[i].real(), gy[i].real());
  }
  return result;
}

double Mat2::spectral_norm() const {
  // Largest singular value of a 2x2 matrix.
  double f = a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22;
  double det = a11 * a22 - a12 * a21;
  double disc = std::sqrt(std::max(0.0, f * f - 4.0 * det * det));
  return std::sqrt(0.5 * (f + disc));
}

double lp_grad_velocity(const VelocityField& u, double t, double p, int samples) {
  if (!(p > 1.0)) throw std::invalid_argument("lp_grad_velocity: requires p > 1");
  if (u.closed_form_lp_grad) return u.closed_form_lp_grad(t, p);
  if (!u.jacobian) throw std::invalid_argument("lp_grad_velocity: velocity has no jacobian");
  const int m = samples;
  const double hs = 1.0 / m;
  const bool inf_norm = std::isinf(p);
  double acc = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec2 x{(i + 0.5) * hs, (j + 0.5) * hs};
      double s = u.jacobian(t, x).spectral_norm();
      if (inf_norm)
        acc = std::max(acc, s);
      else
        acc += std::pow(s, p);
    }
  if (inf_norm) return acc;
  return std::pow(acc * hs * hs, 1.0 / p);
}

}  // namespace torusmix
