#pragma once

#include <optional>

#include "fdnet/kernels.hpp"
#include "fdnet/model.hpp"

namespace fdnet {

struct ThroughputReport
{
    double t_fd_min = 0;  ///< worst-case FD throughput [bit/s/Hz]
    double t_hd_max = 0;  ///< best-case HD throughput [bit/s/Hz]
    double tg_min = 0;    ///< t_fd_min / t_hd_max
    /// Closed-form advantage condition; only defined for n_rx = n_tx = 1.
    std::optional<bool> condition_holds;
};

/// 2 P1 log2(1 + theta) with P1 the first-hop success probability in
/// LowerBound mode. theta = 0 gives 0.
double t_fd_min(NetworkConfig const& cfg, QuadratureSettings const& q = {});

/// P_HD log2(1 + theta) where P_HD is the derivative sum (to n_rx - 1) of
///   L_HD(s) = exp(-lambda (1 + 2/alpha) rho_bh C(alpha) s^(2/alpha)),
/// i.e. only HD interferers and no self-interference. theta = 0 gives 0.
double t_hd_max(NetworkConfig const& cfg, QuadratureSettings const& q = {});

/// The ratio is formed with the common exponential factors divided out, so
/// it stays finite when both throughputs underflow. Throws NumericError for
/// theta = 0.
ThroughputReport tg_min(NetworkConfig const& cfg,
                        QuadratureSettings const& q = {});

/// (1 + s b rho_fd)^a <= 2 exp(-lambda ((1 - 2/alpha) rho_bh + 2 rho_fd)
///                               C(alpha) s^(2/alpha)),
/// which is tg_min >= 1 rearranged. Throws ConfigError unless
/// n_rx = n_tx = 1.
bool fd_advantage_condition(NetworkConfig const& cfg);

struct CrossoverResult
{
    enum class Status
    {
        Found,
        AboveOneEverywhere,  ///< tg_min >= 1 at both bracket ends
        BelowOneEverywhere,  ///< tg_min < 1 at both bracket ends
    };
    Status status = Status::Found;
    double omega_db = 0;  ///< midpoint of the final bracket when Found
    double omega = 0;     ///< linear value of omega_db
    double bracket_lo_db = 0;
    double bracket_hi_db = 0;
};

/// Bisection on omega in dB for tg_min(omega) = 1 down to resolution_db.
CrossoverResult omega_crossover(NetworkConfig const& cfg,
                                QuadratureSettings const& q = {},
                                double lo_db = -120, double hi_db = 0,
                                double resolution_db = 0.1);

}  // namespace fdnet
