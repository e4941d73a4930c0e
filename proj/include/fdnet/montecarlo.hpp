#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fdnet/model.hpp"
#include "fdnet/parallel.hpp"

namespace fdnet {

struct Point
{
    double x = 0;
    double y = 0;
};

/// One realization of the marked PPP of FD nodes around the typical
/// receiver at the origin. The typical link is not part of it.
struct NetworkSample
{
    std::vector<Point> fd_positions;
    std::vector<double> bh_offsets;  ///< angle of each node's HD transmitter
    std::vector<double> ut_offsets;  ///< angle of each node's HD receiver
    double region_radius = 0;
};

struct MCEstimate
{
    double mean = 0;
    double half_width_95 = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct SimulationSettings
{
    /// Disk radius of the simulated network; 0 selects
    /// default_region_radius for the hop being simulated.
    double region_radius = 0;
    /// Adds noise_power to the interference (off by default, matching the
    /// interference-limited analysis).
    bool include_noise = false;
    Execution exec = Execution::Parallel;
};

/// Identifies one independent random stream: hops, trials and sample kinds
/// never share draws.
struct StreamId
{
    std::uint64_t seed = 0;
    std::uint64_t domain = 0;
    std::uint64_t trial = 0;
};

namespace domain {
inline constexpr std::uint64_t kHop1 = 1;
inline constexpr std::uint64_t kHop2 = 2;
inline constexpr std::uint64_t kSelfInterference = 3;
inline constexpr std::uint64_t kNetwork = 4;
}  // namespace domain

/// Nodes are generated in annuli bounded by 2^(k/4 - 8) m, each from its own
/// stream, so a larger disk keeps every node of a smaller one.
double ring_boundary(int k);
/// Smallest ring boundary >= radius.
double round_up_to_ring(double radius);

/// Disk radius for which the interference beyond it shifts the Laplace
/// exponent by at most 1e-5 at abscissa s:
///   lambda 2 pi s (rho_fd + rho_bh) R^(2-alpha) / (alpha - 2) <= 1e-5,
/// floored at max(200 m, 20 r_bh), capped at 20 km and rounded up to a ring
/// boundary.
double default_region_radius(NetworkConfig const& cfg, double s);

/// Poisson(lambda pi R^2) nodes uniform on the disk of radius R (R is
/// rounded up to a ring boundary), each with two independent uniform mark
/// angles.
NetworkSample sample_network(NetworkConfig const& cfg, double region_radius,
                             StreamId const& id);

/// Everything one trial computes; exposed for tests.
struct TrialBreakdown
{
    double desired_power = 0;  ///< |h|^2 after matched filtering
    double signal = 0;         ///< transmit power * pathloss * desired_power
    double fd_interference = 0;
    double hd_interference = 0;  ///< HD transmitters of the other nodes
    double self_interference = 0;  ///< rho_fd S_kk (hop 1 only)
    double own_bh_interference = 0;  ///< typical backhaul transmitter (hop 2)
    std::size_t interferers = 0;
    bool success = false;
};

TrialBreakdown hop1_trial(NetworkConfig const& cfg, double region_radius,
                          bool include_noise, StreamId const& id);
TrialBreakdown hop2_trial(NetworkConfig const& cfg, double region_radius,
                          bool include_noise, StreamId const& id);

/// Fraction of trials with SIR > theta at the FD relay.
MCEstimate simulate_hop1(NetworkConfig const& cfg, std::uint64_t trials,
                         std::uint64_t seed,
                         SimulationSettings const& sim = {});
/// Fraction of trials with SIR > theta at the HD user, on an independent
/// network draw.
MCEstimate simulate_hop2(NetworkConfig const& cfg, std::uint64_t trials,
                         std::uint64_t seed,
                         SimulationSettings const& sim = {});

struct JointEstimate
{
    MCEstimate hop1;
    MCEstimate hop2;
    MCEstimate joint;  ///< product; half width by error propagation
};

JointEstimate estimate_joint(NetworkConfig const& cfg, std::uint64_t trials,
                             std::uint64_t seed,
                             SimulationSettings const& sim = {});

/// Estimate from a success count. The half width is the 95% normal
/// interval evaluated at the Agresti-Coull centre (k + 2)/(n + 4), which
/// stays positive when k = 0 or k = n.
MCEstimate binomial_estimate(std::uint64_t successes, std::uint64_t trials,
                             std::uint64_t seed);

/// n draws of |v^H H w|^2 with H Ricean (mean mu, std nu per entry) and v,
/// w isotropic unit vectors independent of H.
std::vector<double> si_power_samples(NetworkConfig const& cfg, std::size_t n,
                                     std::uint64_t seed,
                                     Execution exec = Execution::Parallel);

/// Desired-link powers of hop 1 (chi^2 with 2 n_rx degrees of freedom,
/// unit-mean summands) and of hop 2 (2 n_tx), drawn exactly as in the
/// trials.
std::vector<double> hop1_desired_power_samples(NetworkConfig const& cfg,
                                               std::size_t n,
                                               std::uint64_t seed);
std::vector<double> hop2_desired_power_samples(NetworkConfig const& cfg,
                                               std::size_t n,
                                               std::uint64_t seed);

/// One-sample Kolmogorov-Smirnov statistic against Gamma(shape, scale).
/// Sorts a copy of the samples.
double ks_statistic_gamma(std::span<double const> samples, double shape,
                          double scale);

}  // namespace fdnet
