#include "fdnet/throughput.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fdnet/selfinterference.hpp"
#include "fdnet/success.hpp"

namespace fdnet {

namespace {

// Validates cfg with theta = 0 permitted; returns true when theta == 0.
bool zero_threshold(NetworkConfig const& cfg)
{
    if (cfg.theta == 0)
    {
        NetworkConfig probe = cfg;
        probe.theta = 1;
        validate_config(probe);
        return true;
    }
    validate_config(cfg);
    return false;
}

double hd_exponent_coefficient(NetworkConfig const& cfg)
{
    return (1 + 2 / cfg.alpha) * cfg.rho_bh * bound_kernel_constant(cfg.alpha);
}

// Derivative sum of exp(-lambda coef s^(2/alpha)) * prefactor with the
// factor exp(-lambda coef s^(2/alpha)) itself taken out, so that it cannot
// underflow. prefactor may be null.
double scaled_probability(NetworkConfig const& cfg, double coef, double s,
                          DerivativeSeries const* prefactor)
{
    int const order = cfg.n_rx - 1;
    std::vector<double> inner(order + 1, 0.0);
    if (cfg.lambda > 0)
    {
        DerivativeSeries const e = power_law_series(-cfg.lambda * coef,
                                                    2 / cfg.alpha, s, order);
        for (int j = 1; j <= order; ++j)
            inner[j] = e[j];
    }
    DerivativeSeries const field = exp_compose({s, std::move(inner)});
    return alternating_taylor_sum(prefactor ? leibniz_product(*prefactor, field)
                                            : field);
}

}  // namespace

double t_fd_min(NetworkConfig const& cfg, QuadratureSettings const& q)
{
    if (zero_threshold(cfg))
        return 0;
    return 2 * p_suc_first(cfg, EvalMode::LowerBound, q)
           * std::log2(1 + cfg.theta);
}

double t_hd_max(NetworkConfig const& cfg, QuadratureSettings const&)
{
    if (zero_threshold(cfg))
        return 0;
    double const s = first_hop_abscissa(cfg);
    int const order = cfg.n_rx - 1;
    DerivativeSeries const field
        = cfg.lambda == 0
              ? DerivativeSeries::constant(s, 1.0, order)
              : exp_compose(power_law_series(
                  -cfg.lambda * hd_exponent_coefficient(cfg), 2 / cfg.alpha, s,
                  order));
    return probability_from_laplace(field) * std::log2(1 + cfg.theta);
}

ThroughputReport tg_min(NetworkConfig const& cfg, QuadratureSettings const& q)
{
    ThroughputReport r;
    r.t_fd_min = t_fd_min(cfg, q);
    r.t_hd_max = t_hd_max(cfg, q);
    if (cfg.theta == 0)
        throw NumericError("tg_min: HD throughput is zero (theta = 0)");

    // Both throughputs carry a factor exp(-lambda c s^(2/alpha)); the ratio
    // is formed with those factors divided out, which keeps it finite when
    // the throughputs themselves underflow.
    GammaSI const si = si_gamma_params(ricean_params(cfg.k_factor, cfg.omega),
                                       cfg.n_rx, cfg.n_tx);
    double const s = first_hop_abscissa(cfg);
    double const c = bound_kernel_constant(cfg.alpha);
    double const c_fd = 2 * (cfg.rho_fd + cfg.rho_bh) * c;
    double const c_hd = hd_exponent_coefficient(cfg);
    DerivativeSeries const sif
        = inv_power_series(si.b * cfg.rho_fd, si.a, s, cfg.n_rx - 1);
    double const p_fd = scaled_probability(cfg, c_fd, s, &sif);
    double const p_hd = scaled_probability(cfg, c_hd, s, nullptr);
    double const gap = cfg.lambda * (c_fd - c_hd) * std::pow(s, 2 / cfg.alpha);
    r.tg_min = 2 * std::max(p_fd, 0.0) / p_hd * std::exp(-gap);
    if (cfg.n_rx == 1 && cfg.n_tx == 1)
        r.condition_holds = fd_advantage_condition(cfg);
    return r;
}

bool fd_advantage_condition(NetworkConfig const& cfg)
{
    validate_config(cfg);
    if (cfg.n_rx != 1 || cfg.n_tx != 1)
        throw ConfigError("fd_advantage_condition requires n_rx = n_tx = 1");
    GammaSI const si = si_gamma_params(ricean_params(cfg.k_factor, cfg.omega),
                                       cfg.n_rx, cfg.n_tx);
    double const s = first_hop_abscissa(cfg);
    double const lhs = std::pow(1 + s * si.b * cfg.rho_fd, si.a);
    double const rhs
        = 2
          * std::exp(-cfg.lambda
                     * ((1 - 2 / cfg.alpha) * cfg.rho_bh + 2 * cfg.rho_fd)
                     * bound_kernel_constant(cfg.alpha)
                     * std::pow(s, 2 / cfg.alpha));
    return lhs <= rhs;
}

CrossoverResult omega_crossover(NetworkConfig const& cfg,
                                QuadratureSettings const& q, double lo_db,
                                double hi_db, double resolution_db)
{
    if (!(lo_db < hi_db) || !(resolution_db > 0))
        throw ConfigError("omega_crossover: need lo_db < hi_db and "
                          "resolution_db > 0");
    auto tg_at = [&](double omega_db) {
        NetworkConfig c = cfg;
        c.omega = db_to_linear(omega_db);
        return tg_min(c, q).tg_min;
    };

    CrossoverResult res;
    double const g_lo = tg_at(lo_db);
    double const g_hi = tg_at(hi_db);
    if (g_lo >= 1 && g_hi >= 1)
        res.status = CrossoverResult::Status::AboveOneEverywhere;
    else if (g_lo < 1 && g_hi < 1)
        res.status = CrossoverResult::Status::BelowOneEverywhere;
    else if (g_lo < 1)
        throw NumericError("omega_crossover: tg_min increases with omega");
    if (res.status != CrossoverResult::Status::Found)
    {
        res.bracket_lo_db = lo_db;
        res.bracket_hi_db = hi_db;
        return res;
    }

    // tg_min decreases in omega: keep tg(lo) >= 1 > tg(hi).
    double lo = lo_db;
    double hi = hi_db;
    while (hi - lo > resolution_db)
    {
        double const mid = 0.5 * (lo + hi);
        if (tg_at(mid) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    res.bracket_lo_db = lo;
    res.bracket_hi_db = hi;
    res.omega_db = 0.5 * (lo + hi);
    res.omega = db_to_linear(res.omega_db);
    return res;
}

}  // namespace fdnet
