#pragma once

namespace fdnet {

/// Per-entry mean and standard deviation of the Ricean loopback channel.
struct RiceanParams
{
    double mu = 0;  ///< mean amplitude
    double nu = 0;  ///< standard deviation (amplitude)
};

/// Gamma fit of the residual self-interference power |v^H H w|^2.
struct GammaSI
{
    double a = 1;           ///< shape
    double b = 0;           ///< scale (power units)
    double gamma_corr = 0;  ///< antenna correction factor
};

struct SIMoments
{
    double mean = 0;           ///< E[S]
    double second_moment = 0;  ///< E[S^2]
    double variance = 0;
};

/// mu = sqrt(K*Omega/(K+1)), nu = sqrt(Omega/(K+1)).
RiceanParams ricean_params(double k_factor, double omega);

/// (4 N_R N_T - (N_R+1)(N_T+1)) / ((N_R+1)(N_T+1)).
double antenna_correction(int n_rx, int n_tx);

/// Moment-matched Gamma parameters of the self-interference power under
/// isotropic unit-norm combining/beamforming vectors.
GammaSI si_gamma_params(RiceanParams const& rp, int n_rx, int n_tx);

/// Exact first two moments of |v^H H w|^2 for isotropic unit v, w
/// independent of H.
SIMoments si_theoretical_moments(RiceanParams const& rp, int n_rx, int n_tx);

}  // namespace fdnet
