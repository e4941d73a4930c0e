#include "fdnet/model.hpp"

#include <cmath>
#include <sstream>

namespace fdnet {

std::string_view to_string(EvalMode mode)
{
    switch (mode)
    {
        case EvalMode::Exact:
            return "exact";
        case EvalMode::LowerBound:
            return "lower";
        case EvalMode::UpperBound:
            return "upper";
    }
    return "unknown";
}

EvalMode eval_mode_from_string(std::string_view name)
{
    if (name == "exact" || name == "Exact")
        return EvalMode::Exact;
    if (name == "lower" || name == "LowerBound")
        return EvalMode::LowerBound;
    if (name == "upper" || name == "UpperBound")
        return EvalMode::UpperBound;
    throw ConfigError("unknown evaluation mode '" + std::string(name) + "'");
}

namespace {

template<class T>
void require(bool ok, char const* name, T value, char const* rule)
{
    if (ok)
        return;
    std::ostringstream os;
    os.precision(17);
    os << "invalid configuration: " << name << " = " << value
       << " violates " << rule;
    throw ConfigError(os.str());
}

}  // namespace

NetworkConfig const& validate_config(NetworkConfig const& cfg)
{
    // NaN fails every comparison below, so it is rejected as well.
    require(cfg.lambda >= 0 && std::isfinite(cfg.lambda), "lambda",
            cfg.lambda, "lambda >= 0");
    require(cfg.alpha > 2 && std::isfinite(cfg.alpha), "alpha", cfg.alpha,
            "alpha > 2");
    require(cfg.r_ut > 0, "r_ut", cfg.r_ut, "r_ut > 0");
    require(cfg.r_bh > cfg.r_ut && std::isfinite(cfg.r_bh), "r_bh", cfg.r_bh,
            "r_bh > r_ut");
    require(cfg.rho_fd > 0 && std::isfinite(cfg.rho_fd), "rho_fd",
            cfg.rho_fd, "rho_fd > 0");
    require(cfg.rho_bh > 0 && std::isfinite(cfg.rho_bh), "rho_bh",
            cfg.rho_bh, "rho_bh > 0");
    require(cfg.theta > 0 && std::isfinite(cfg.theta), "theta", cfg.theta,
            "theta > 0");
    require(cfg.omega > 0 && std::isfinite(cfg.omega), "omega", cfg.omega,
            "omega > 0");
    require(cfg.k_factor >= 0 && std::isfinite(cfg.k_factor), "k_factor",
            cfg.k_factor, "k_factor >= 0");
    require(cfg.n_rx >= 1, "n_rx", cfg.n_rx, "n_rx >= 1");
    require(cfg.n_tx >= 1, "n_tx", cfg.n_tx, "n_tx >= 1");
    require(cfg.noise_power >= 0 && std::isfinite(cfg.noise_power),
            "noise_power", cfg.noise_power, "noise_power >= 0");
    return cfg;
}

double db_to_linear(double x_db)
{
    return std::pow(10.0, x_db / 10.0);
}

double linear_to_db(double x)
{
    if (!(x > 0))
        throw ConfigError("linear_to_db requires a positive value");
    return 10.0 * std::log10(x);
}

double first_hop_abscissa(NetworkConfig const& cfg)
{
    return cfg.theta * std::pow(cfg.r_bh, cfg.alpha) / cfg.rho_bh;
}

double second_hop_abscissa(NetworkConfig const& cfg)
{
    return cfg.theta * std::pow(cfg.r_ut, cfg.alpha) / cfg.rho_fd;
}

}  // namespace fdnet
