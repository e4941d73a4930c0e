#pragma once

#include "fdnet/derivative_series.hpp"
#include "fdnet/model.hpp"
#include "fdnet/parallel.hpp"

namespace fdnet {

struct QuadratureSettings
{
    double rel_tol = 1e-8;
    /// The radial integral is split at r_max_factor times the largest
    /// natural length scale; beyond it an exact change of variables maps
    /// the infinite tail onto a unit interval.
    double r_max_factor = 8.0;
    /// Starting node count of the angular trapezoid rule.
    int angular_nodes = 64;
    int max_angular_nodes = 1 << 16;
    int max_radial_intervals = 2000;
    Execution exec = Execution::Parallel;
};

/// Throws ConfigError unless rel_tol > 0, r_max_factor >= 1 and
/// angular_nodes is even and >= 8.
QuadratureSettings const& validate_settings(QuadratureSettings const& q);

/// Angular kernel
///   Psi(s, r) = int_0^{2 pi} dphi / (1 + s rho_bh d(phi)^-alpha),
///   d(phi)^2  = r_bh^2 + r^2 + 2 r_bh r cos(phi).
/// Psi(0, r) = 2 pi.
double psi(double s, double r, NetworkConfig const& cfg,
           QuadratureSettings const& q = {});

/// d^j Psi / ds^j for j = 0..order, differentiated under the integral.
DerivativeSeries psi_derivatives(double s, double r, int order,
                                 NetworkConfig const& cfg,
                                 QuadratureSettings const& q = {});

/// Radial kernel
///   Upsilon(s) = int_0^inf (2 pi - Psi(s, r) / (1 + s rho_fd r^-alpha)) r dr.
/// Upsilon(0) = 0.
double upsilon(double s, NetworkConfig const& cfg,
               QuadratureSettings const& q = {});

/// Upsilon and its s-derivatives. order > 0 requires s > 0.
DerivativeSeries upsilon_derivatives(double s, int order,
                                     NetworkConfig const& cfg,
                                     QuadratureSettings const& q = {});

enum class BoundKind
{
    Min,  ///< (1 + 2/alpha) (rho_fd + rho_bh) pi^2 s^(2/alpha) / (alpha sin(2 pi/alpha))
    Max,  ///< 2 (rho_fd + rho_bh) pi^2 s^(2/alpha) / (alpha sin(2 pi/alpha))
};

/// pi^2 / (alpha sin(2 pi / alpha)).
double bound_kernel_constant(double alpha);

double upsilon_bound(double s, BoundKind which, NetworkConfig const& cfg);
DerivativeSeries upsilon_bound_derivatives(double s, BoundKind which,
                                           int order,
                                           NetworkConfig const& cfg);

}  // namespace fdnet
