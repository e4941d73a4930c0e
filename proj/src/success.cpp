#include "fdnet/success.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fdnet/selfinterference.hpp"

namespace fdnet {

namespace {

constexpr double kOvershoot = 1e-9;

// Series of exp(-lambda Upsilon(s)) in the requested mode.
DerivativeSeries interference_field(double s, int order,
                                    NetworkConfig const& cfg, EvalMode mode,
                                    QuadratureSettings const& q)
{
    if (cfg.lambda == 0)
        return DerivativeSeries::constant(s, 1.0, order);
    DerivativeSeries ups = [&] {
        switch (mode)
        {
            case EvalMode::LowerBound:
                return upsilon_bound_derivatives(s, BoundKind::Max, order, cfg);
            case EvalMode::UpperBound:
                return upsilon_bound_derivatives(s, BoundKind::Min, order, cfg);
            case EvalMode::Exact:
                break;
        }
        return upsilon_derivatives(s, order, cfg, q);
    }();
    return exp_compose(ups.scaled(-cfg.lambda));
}

void check_abscissa(double s)
{
    if (!(s > 0) || !std::isfinite(s))
        throw ConfigError("Laplace abscissa must be finite and > 0");
}

}  // namespace

DerivativeSeries laplace_first_hop(double s, NetworkConfig const& cfg,
                                   EvalMode mode, QuadratureSettings const& q)
{
    validate_config(cfg);
    check_abscissa(s);
    int const order = cfg.n_rx - 1;
    GammaSI const si = si_gamma_params(ricean_params(cfg.k_factor, cfg.omega),
                                       cfg.n_rx, cfg.n_tx);
    DerivativeSeries const self
        = inv_power_series(si.b * cfg.rho_fd, si.a, s, order);
    return leibniz_product(self, interference_field(s, order, cfg, mode, q));
}

DerivativeSeries laplace_second_hop(double s, NetworkConfig const& cfg,
                                    EvalMode mode, QuadratureSettings const& q)
{
    validate_config(cfg);
    check_abscissa(s);
    int const order = cfg.n_tx - 1;
    DerivativeSeries const own = [&] {
        switch (mode)
        {
            case EvalMode::LowerBound:
                return inv_power_series(
                    cfg.rho_bh * std::pow(cfg.r_bh - cfg.r_ut, -cfg.alpha), 1.0,
                    s, order);
            case EvalMode::UpperBound:
                return inv_power_series(
                    cfg.rho_bh * std::pow(cfg.r_bh + cfg.r_ut, -cfg.alpha), 1.0,
                    s, order);
            case EvalMode::Exact:
                break;
        }
        return psi_derivatives(s, cfg.r_ut, order, cfg, q)
            .scaled(1 / (2 * std::numbers::pi));
    }();
    return leibniz_product(own, interference_field(s, order, cfg, mode, q));
}

double probability_from_laplace(DerivativeSeries const& laplace)
{
    double const p = alternating_taylor_sum(laplace);
    if (!(p >= -kOvershoot && p <= 1 + kOvershoot))
    {
        std::ostringstream os;
        os.precision(17);
        os << "success probability " << p << " outside [0, 1] beyond "
           << "the rounding allowance";
        throw NumericError(os.str());
    }
    return std::clamp(p, 0.0, 1.0);
}

double p_suc_first(NetworkConfig const& cfg, EvalMode mode,
                   QuadratureSettings const& q)
{
    double const s = first_hop_abscissa(validate_config(cfg));
    return probability_from_laplace(laplace_first_hop(s, cfg, mode, q));
}

double p_suc_second(NetworkConfig const& cfg, EvalMode mode,
                    QuadratureSettings const& q)
{
    double const s = second_hop_abscissa(validate_config(cfg));
    return probability_from_laplace(laplace_second_hop(s, cfg, mode, q));
}

SuccessResult p_suc_joint(NetworkConfig const& cfg, EvalMode mode,
                          QuadratureSettings const& q)
{
    SuccessResult r;
    r.mode = mode;
    r.s1 = first_hop_abscissa(validate_config(cfg));
    r.s2 = second_hop_abscissa(cfg);
    r.p1 = probability_from_laplace(laplace_first_hop(r.s1, cfg, mode, q));
    r.p2 = probability_from_laplace(laplace_second_hop(r.s2, cfg, mode, q));
    r.p_joint = r.p1 * r.p2;
    return r;
}

}  // namespace fdnet
