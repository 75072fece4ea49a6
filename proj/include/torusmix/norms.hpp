#pragma once

#include <complex>
#include <vector>

#include "torusmix/field.hpp"
#include "torusmix/velocity.hpp"

namespace torusmix {

/// Spectral homogeneous H^-1 norm:
///   sqrt( sum_{k != 0} |rho_hat_k|^2 / (2 pi |k|)^2 )
/// with unitary coefficients rho_hat_k = n^-d sum_j rho(x_j) e^{-2pi i k x_j}
/// and integer wavenumbers in (-n/2, n/2] per axis. Requires a mean-zero
/// field (|mean| <= 1e-10).
double hminus1(const ScalarField& rho);

/// Discrete BV seminorm. Binary fields (all values +-1) use the exact
/// interface-counting rule 2 * (#sign-change faces) * h^{d-1}; smooth fields
/// use centered-difference gradient quadrature.
double bv_seminorm(const ScalarField& rho);

/// Ginzburg-Landau energy: integral of |grad rho|^2/2 + (1-rho^2)^2/2.
/// Requires values in [-1.5, 1.5].
double gl_energy(const ScalarField& rho);

/// Cell average of rho^2 (the L2-squared mixing norm; 1 for binary fields).
double variance(const ScalarField& rho);

struct NormReport {
  double hminus1 = 0.0;
  double bv = 0.0;
  double variance = 0.0;
  double gl_energy = 0.0;
};

NormReport compute_norms(const ScalarField& rho);

/// Unitary-normalized DFT coefficients in row-major layout (n^d entries,
/// frequency index j <-> wavenumber j or j-n per axis).
std::vector<std::complex<double>> dft(const ScalarField& f);

/// |grad f| by spectral differentiation (exact for band-limited fields).
ScalarField spectral_gradient_norm(const ScalarField& f);

/// ||grad u(t,.)||_{L^p} from the analytic Jacobian: pointwise spectral norm,
/// grid quadrature with `samples` points per axis; p = infinity takes the max.
/// The field's closed form is used when available.
double lp_grad_velocity(const VelocityField& u, double t, double p, int samples = 256);

}  // namespace torusmix
