#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdnet {

/// Raised when a configuration or argument violates a domain invariant.
class ConfigError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical kernel cannot deliver a trustworthy value
/// (quadrature non-convergence, pole crossing, overflow, probability
/// overshoot beyond the rounding allowance).
class NumericError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Scenario parameters for the two-hop full-duplex relay network.
///
/// All quantities are linear: powers in watts, distances in meters,
/// density in nodes per square meter. The defaults are the reference
/// scenario (alpha = 4, 5 m backhaul link, 0.5 m user link, 0.5 W / 1 W,
/// 0 dB threshold, K = 1, -80 dB self-interference attenuation) with a
/// density of 1e-3 and single-antenna relays.
struct NetworkConfig
{
    double lambda = 1e-3;      ///< FD node density [1/m^2]
    double alpha = 4.0;        ///< pathloss exponent
    double r_bh = 5.0;         ///< first-hop (backhaul -> relay) distance [m]
    double r_ut = 0.5;         ///< second-hop (relay -> user) distance [m]
    double rho_fd = 0.5;       ///< FD relay transmit power [W]
    double rho_bh = 1.0;       ///< HD transmitter power [W]
    double theta = 1.0;        ///< SINR threshold, shared by both hops
    int n_rx = 1;              ///< relay receive antennas
    int n_tx = 1;              ///< relay transmit antennas
    double k_factor = 1.0;     ///< Ricean K of the loopback channel
    double omega = 1e-8;       ///< self-interference attenuation (power gain)
    double noise_power = 0.0;  ///< receiver noise; used by the simulator only

    friend bool operator==(NetworkConfig const&, NetworkConfig const&)
        = default;
};

/// How the analytic success probabilities are evaluated.
enum class EvalMode
{
    Exact,       ///< numerically integrated interference kernels
    LowerBound,  ///< closed-form bounds giving the smallest Laplace transform
    UpperBound,  ///< closed-form bounds giving the largest Laplace transform
};

std::string_view to_string(EvalMode mode);
EvalMode eval_mode_from_string(std::string_view name);

/// Returns cfg unchanged if every invariant holds, otherwise throws
/// ConfigError naming the first violated one.
NetworkConfig const& validate_config(NetworkConfig const& cfg);

double db_to_linear(double x_db);
double linear_to_db(double x);

/// First-hop Laplace abscissa theta * R_bh^alpha / rho_bh.
double first_hop_abscissa(NetworkConfig const& cfg);
/// Second-hop Laplace abscissa theta * R_ut^alpha / rho_fd.
double second_hop_abscissa(NetworkConfig const& cfg);

}  // namespace fdnet
