#pragma once

#include "fdnet/derivative_series.hpp"
#include "fdnet/kernels.hpp"
#include "fdnet/model.hpp"

namespace fdnet {

struct SuccessResult
{
    double p1 = 0;       ///< first hop (backhaul -> FD relay)
    double p2 = 0;       ///< second hop (FD relay -> user)
    double p_joint = 0;  ///< p1 * p2 (hops are reshuffled, hence independent)
    EvalMode mode = EvalMode::Exact;
    double s1 = 0;
    double s2 = 0;
};

/// Laplace transform of the first-hop interference and its derivatives up
/// to order n_rx - 1:
///   L(s) = (1 + s b rho_fd)^(-a) exp(-lambda Upsilon(s)).
/// LowerBound substitutes the larger closed-form Upsilon, UpperBound the
/// smaller one.
DerivativeSeries laplace_first_hop(double s, NetworkConfig const& cfg,
                                   EvalMode mode,
                                   QuadratureSettings const& q = {});

/// Laplace transform of the second-hop interference up to order n_tx - 1:
///   L(s) = Psi(s, r_ut)/(2 pi) exp(-lambda Upsilon(s)).
/// The bounds replace the angular factor by 1/(1 + s rho_bh (r_bh -+ r_ut)^-alpha).
DerivativeSeries laplace_second_hop(double s, NetworkConfig const& cfg,
                                    EvalMode mode,
                                    QuadratureSettings const& q = {});

/// sum_{n < N} (-s)^n / n! L^(n)(s), clamped to [0, 1] when the overshoot is
/// below 1e-9; a larger overshoot throws NumericError.
double probability_from_laplace(DerivativeSeries const& laplace);

double p_suc_first(NetworkConfig const& cfg, EvalMode mode,
                   QuadratureSettings const& q = {});
double p_suc_second(NetworkConfig const& cfg, EvalMode mode,
                    QuadratureSettings const& q = {});
SuccessResult p_suc_joint(NetworkConfig const& cfg, EvalMode mode,
                          QuadratureSettings const& q = {});

}  // namespace fdnet
