#include "fdnet/selfinterference.hpp"

#include <cmath>

#include "fdnet/model.hpp"

namespace fdnet {

namespace {

void check_antennas(int n_rx, int n_tx)
{
    if (n_rx < 1 || n_tx < 1)
        throw ConfigError("antenna counts must be at least 1");
}

void check_ricean(RiceanParams const& rp)
{
    if (!(rp.mu >= 0) || !(rp.nu > 0))
        throw ConfigError("Ricean parameters require mu >= 0 and nu > 0");
}

}  // namespace

RiceanParams ricean_params(double k_factor, double omega)
{
    if (!(k_factor >= 0) || !(omega > 0) || !std::isfinite(k_factor)
        || !std::isfinite(omega))
    {
        throw ConfigError("ricean_params requires k_factor >= 0, omega > 0");
    }
    return {std::sqrt(k_factor * omega / (k_factor + 1)),
            std::sqrt(omega / (k_factor + 1))};
}

double antenna_correction(int n_rx, int n_tx)
{
    check_antennas(n_rx, n_tx);
    double const nr = n_rx;
    double const nt = n_tx;
    double const denom = (nr + 1) * (nt + 1);
    return (4 * nr * nt - denom) / denom;
}

GammaSI si_gamma_params(RiceanParams const& rp, int n_rx, int n_tx)
{
    check_ricean(rp);
    double const gamma = antenna_correction(n_rx, n_tx);
    // Work with k = mu^2/nu^2 so that tiny attenuations do not underflow
    // the fourth powers; Var[S]/nu^4 = gamma k^2 + 2k + 1.
    double const k = (rp.mu / rp.nu) * (rp.mu / rp.nu);
    double const var_n = gamma * k * k + 2 * k + 1;
    double const mean_n = k + 1;
    return {mean_n * mean_n / var_n, rp.nu * rp.nu * var_n / mean_n, gamma};
}

SIMoments si_theoretical_moments(RiceanParams const& rp, int n_rx, int n_tx)
{
    check_ricean(rp);
    check_antennas(n_rx, n_tx);
    double const nr = n_rx;
    double const nt = n_tx;
    double const mu2 = rp.mu * rp.mu;
    double const nu2 = rp.nu * rp.nu;
    SIMoments m;
    m.mean = mu2 + nu2;
    m.second_moment = 4 * nr * nt / ((nr + 1) * (nt + 1)) * mu2 * mu2
                      + 4 * mu2 * nu2 + 2 * nu2 * nu2;
    m.variance = m.second_moment - m.mean * m.mean;
    return m;
}

}  // namespace fdnet
