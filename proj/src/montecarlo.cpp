#include "fdnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <boost/random/exponential_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/poisson_distribution.hpp>

#include "fdnet/rng.hpp"
#include "fdnet/selfinterference.hpp"

namespace fdnet {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kRingOffset = 32;  // ring_boundary(0) = 2^-8 m
constexpr std::uint64_t kTypicalStream = 0xFFFFFFFFULL;
constexpr double kTailTolerance = 1e-5;

inline double uniform01(Philox4x64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double exp1(Philox4x64& rng)
{
    return boost::random::exponential_distribution<double>(1.0)(rng);
}

inline cplx complex_normal(Philox4x64& rng)
{
    boost::random::normal_distribution<double> n(0.0, std::sqrt(0.5));
    double const re = n(rng);
    double const im = n(rng);
    return {re, im};
}

inline double pathloss(double d2, double alpha)
{
    if (alpha == 4.0)
        return 1 / (d2 * d2);
    return std::pow(d2, -0.5 * alpha);
}

int ring_count(double radius)
{
    int k = static_cast<int>(std::ceil(4 * (std::log2(radius) + 8)));
    k = std::max(k, 0);
    while (k > 0 && ring_boundary(k - 1) >= radius)
        --k;
    while (ring_boundary(k) < radius)
        ++k;
    return k + 1;
}

// Generates the nodes ring by ring. f receives (r, angle, bh, ut,
// fade_fd, fade_hd) where the fading powers are unit-mean exponentials.
template<class F>
void for_each_node(NetworkConfig const& cfg, double radius, StreamId const& id,
                   F&& f)
{
    if (cfg.lambda == 0)
        return;
    int const rings = ring_count(radius);
    double inner2 = 0;
    for (int k = 0; k < rings; ++k)
    {
        double const outer = ring_boundary(k);
        double const outer2 = outer * outer;
        double const area = outer2 - inner2;
        Philox4x64 rng(id.seed, id.domain, id.trial,
                       static_cast<std::uint64_t>(k), 0);
        double const mean = cfg.lambda * std::numbers::pi * area;
        auto const count
            = boost::random::poisson_distribution<std::uint64_t, double>(
                mean)(rng);
        for (std::uint64_t i = 0; i < count; ++i)
        {
            double const r = std::sqrt(inner2 + uniform01(rng) * area);
            double const angle = kTwoPi * uniform01(rng);
            double const bh = kTwoPi * uniform01(rng);
            double const ut = kTwoPi * uniform01(rng);
            double const fade_fd = exp1(rng);
            double const fade_hd = exp1(rng);
            f(r, angle, bh, ut, fade_fd, fade_hd);
        }
        inner2 = outer2;
    }
}

struct FieldSum
{
    double fd = 0;
    double hd = 0;
    std::size_t count = 0;
};

// Interference of the FD nodes and their HD transmitters at the origin.
FieldSum interference_field(NetworkConfig const& cfg, double radius,
                            StreamId const& id)
{
    FieldSum sum;
    double const rbh2 = cfg.r_bh * cfg.r_bh;
    for_each_node(cfg, radius, id,
                  [&](double r, double angle, double bh, double, double ffd,
                      double fhd) {
                      double const r2 = r * r;
                      double const d2 = r2 + rbh2
                                        + 2 * r * cfg.r_bh * std::cos(bh - angle);
                      sum.fd += ffd * pathloss(r2, cfg.alpha);
                      sum.hd += fhd * pathloss(d2, cfg.alpha);
                      ++sum.count;
                  });
    sum.fd *= cfg.rho_fd;
    sum.hd *= cfg.rho_bh;
    return sum;
}

std::vector<cplx> gaussian_vector(Philox4x64& rng, int n)
{
    std::vector<cplx> v(n);
    for (auto& x : v)
        x = complex_normal(rng);
    return v;
}

double norm2(std::vector<cplx> const& v)
{
    double s = 0;
    for (auto const& x : v)
        s += std::norm(x);
    return s;
}

// |v^H H w|^2 with H = mu + nu * CN(0, 1) entries, row-major n_rx x n_tx,
// drawn from rng. v and w need not be normalized; the result is divided by
// |v|^2 |w|^2.
double bilinear_power(Philox4x64& rng, RiceanParams const& rp,
                      std::vector<cplx> const& v, std::vector<cplx> const& w)
{
    cplx acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        cplx row = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            row += (rp.mu + rp.nu * complex_normal(rng)) * w[j];
        acc += std::conj(v[i]) * row;
    }
    return std::norm(acc) / (norm2(v) * norm2(w));
}

struct Hop1Typical
{
    double desired_power;
    double si_power;  // S_kk, before the rho_fd factor
};

Hop1Typical draw_hop1_typical(NetworkConfig const& cfg, RiceanParams const& rp,
                              StreamId const& id)
{
    Philox4x64 rng(id.seed, id.domain, id.trial, kTypicalStream, 0);
    // MRC towards the desired hop-1 channel, MRT towards the relay's own
    // user over an independent channel.
    auto const h = gaussian_vector(rng, cfg.n_rx);
    auto const g = gaussian_vector(rng, cfg.n_tx);
    double const si = bilinear_power(rng, rp, h, g);
    return {norm2(h), si};
}

struct Hop2Typical
{
    double desired_power;
    double own_bh_gain;  // fading * pathloss of the typical BH transmitter
};

Hop2Typical draw_hop2_typical(NetworkConfig const& cfg, StreamId const& id)
{
    Philox4x64 rng(id.seed, id.domain, id.trial, kTypicalStream, 0);
    auto const h = gaussian_vector(rng, cfg.n_tx);
    double const phi = kTwoPi * uniform01(rng);
    double const fade = exp1(rng);
    double const d2 = cfg.r_bh * cfg.r_bh + cfg.r_ut * cfg.r_ut
                      + 2 * cfg.r_bh * cfg.r_ut * std::cos(phi);
    return {norm2(h), fade * pathloss(d2, cfg.alpha)};
}

double resolve_radius(NetworkConfig const& cfg, SimulationSettings const& sim,
                      double s)
{
    if (sim.region_radius > 0)
        return round_up_to_ring(sim.region_radius);
    if (sim.region_radius < 0)
        throw ConfigError("region_radius must be >= 0 (0 selects the default)");
    return default_region_radius(cfg, s);
}

template<class Trial>
MCEstimate run_trials(std::uint64_t trials, std::uint64_t seed, Execution exec,
                      Trial&& trial)
{
    if (trials < 1)
        throw ConfigError("Monte Carlo needs at least one trial");
    std::uint64_t successes = 0;
    auto const n = static_cast<std::int64_t>(trials);
    if (exec == Execution::Parallel)
    {
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : successes)
        for (std::int64_t t = 0; t < n; ++t)
            successes += trial(static_cast<std::uint64_t>(t)) ? 1 : 0;
    }
    else
    {
        for (std::int64_t t = 0; t < n; ++t)
            successes += trial(static_cast<std::uint64_t>(t)) ? 1 : 0;
    }
    return binomial_estimate(successes, trials, seed);
}

}  // namespace

double ring_boundary(int k)
{
    return std::exp2(static_cast<double>(k - kRingOffset) / 4);
}

double round_up_to_ring(double radius)
{
    if (!(radius > 0) || !std::isfinite(radius))
        throw ConfigError("region radius must be finite and > 0");
    return ring_boundary(ring_count(radius) - 1);
}

double default_region_radius(NetworkConfig const& cfg, double s)
{
    validate_config(cfg);
    double radius = std::max(200.0, 20 * cfg.r_bh);
    if (cfg.lambda > 0 && s > 0)
    {
        double const coef = cfg.lambda * kTwoPi * s * (cfg.rho_fd + cfg.rho_bh)
                            / (cfg.alpha - 2);
        double const tail = std::pow(coef / kTailTolerance, 1 / (cfg.alpha - 2));
        radius = std::max(radius, tail);
    }
    return round_up_to_ring(std::min(radius, 20000.0));
}

NetworkSample sample_network(NetworkConfig const& cfg, double region_radius,
                             StreamId const& id)
{
    validate_config(cfg);
    NetworkSample ns;
    ns.region_radius = round_up_to_ring(region_radius);
    for_each_node(cfg, ns.region_radius, id,
                  [&](double r, double angle, double bh, double ut, double,
                      double) {
                      ns.fd_positions.push_back(
                          {r * std::cos(angle), r * std::sin(angle)});
                      ns.bh_offsets.push_back(bh);
                      ns.ut_offsets.push_back(ut);
                  });
    return ns;
}

TrialBreakdown hop1_trial(NetworkConfig const& cfg, double region_radius,
                          bool include_noise, StreamId const& id)
{
    RiceanParams const rp = ricean_params(cfg.k_factor, cfg.omega);
    Hop1Typical const typ = draw_hop1_typical(cfg, rp, id);
    FieldSum const field = interference_field(cfg, region_radius, id);

    TrialBreakdown tb;
    tb.desired_power = typ.desired_power;
    tb.signal = cfg.rho_bh * pathloss(cfg.r_bh * cfg.r_bh, cfg.alpha)
                * typ.desired_power;
    tb.fd_interference = field.fd;
    tb.hd_interference = field.hd;
    tb.self_interference = cfg.rho_fd * typ.si_power;
    tb.interferers = field.count;
    double const noise = include_noise ? cfg.noise_power : 0.0;
    double const total
        = tb.fd_interference + tb.hd_interference + tb.self_interference;
    tb.success = tb.signal > cfg.theta * (total + noise);
    return tb;
}

TrialBreakdown hop2_trial(NetworkConfig const& cfg, double region_radius,
                          bool include_noise, StreamId const& id)
{
    Hop2Typical const typ = draw_hop2_typical(cfg, id);
    FieldSum const field = interference_field(cfg, region_radius, id);

    TrialBreakdown tb;
    tb.desired_power = typ.desired_power;
    tb.signal = cfg.rho_fd * pathloss(cfg.r_ut * cfg.r_ut, cfg.alpha)
                * typ.desired_power;
    tb.fd_interference = field.fd;
    tb.hd_interference = field.hd;
    tb.own_bh_interference = cfg.rho_bh * typ.own_bh_gain;
    tb.interferers = field.count;
    double const noise = include_noise ? cfg.noise_power : 0.0;
    double const total
        = tb.fd_interference + tb.hd_interference + tb.own_bh_interference;
    tb.success = tb.signal > cfg.theta * (total + noise);
    return tb;
}

MCEstimate binomial_estimate(std::uint64_t successes, std::uint64_t trials,
                             std::uint64_t seed)
{
    if (trials == 0 || successes > trials)
        throw ConfigError("binomial_estimate: need 0 <= successes <= trials > 0");
    MCEstimate e;
    e.trials = trials;
    e.seed = seed;
    double const n = static_cast<double>(trials);
    e.mean = static_cast<double>(successes) / n;
    double const centre = (static_cast<double>(successes) + 2) / (n + 4);
    e.half_width_95 = 1.96 * std::sqrt(centre * (1 - centre) / (n + 4));
    return e;
}

MCEstimate simulate_hop1(NetworkConfig const& cfg, std::uint64_t trials,
                         std::uint64_t seed, SimulationSettings const& sim)
{
    validate_config(cfg);
    double const radius = resolve_radius(cfg, sim, first_hop_abscissa(cfg));
    return run_trials(trials, seed, sim.exec, [&](std::uint64_t t) {
        return hop1_trial(cfg, radius, sim.include_noise,
                          {seed, domain::kHop1, t})
            .success;
    });
}

MCEstimate simulate_hop2(NetworkConfig const& cfg, std::uint64_t trials,
                         std::uint64_t seed, SimulationSettings const& sim)
{
    validate_config(cfg);
    double const radius = resolve_radius(cfg, sim, second_hop_abscissa(cfg));
    return run_trials(trials, seed, sim.exec, [&](std::uint64_t t) {
        return hop2_trial(cfg, radius, sim.include_noise,
                          {seed, domain::kHop2, t})
            .success;
    });
}

JointEstimate estimate_joint(NetworkConfig const& cfg, std::uint64_t trials,
                             std::uint64_t seed, SimulationSettings const& sim)
{
    JointEstimate j;
    j.hop1 = simulate_hop1(cfg, trials, seed, sim);
    j.hop2 = simulate_hop2(cfg, trials, seed, sim);
    j.joint.trials = trials;
    j.joint.seed = seed;
    j.joint.mean = j.hop1.mean * j.hop2.mean;
    j.joint.half_width_95 = std::hypot(j.hop2.mean * j.hop1.half_width_95,
                                       j.hop1.mean * j.hop2.half_width_95);
    return j;
}

std::vector<double> si_power_samples(NetworkConfig const& cfg, std::size_t n,
                                     std::uint64_t seed, Execution exec)
{
    validate_config(cfg);
    if (n < 1)
        throw ConfigError("si_power_samples needs n >= 1");
    RiceanParams const rp = ricean_params(cfg.k_factor, cfg.omega);
    std::vector<double> out(n);
    auto one = [&](std::size_t i) {
        Philox4x64 rng(seed, domain::kSelfInterference, i, 0, 0);
        auto const v = gaussian_vector(rng, cfg.n_rx);
        auto const w = gaussian_vector(rng, cfg.n_tx);
        out[i] = bilinear_power(rng, rp, v, w);
    };
    auto const count = static_cast<std::int64_t>(n);
    if (exec == Execution::Parallel)
    {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i)
            one(static_cast<std::size_t>(i));
    }
    else
    {
        for (std::int64_t i = 0; i < count; ++i)
            one(static_cast<std::size_t>(i));
    }
    return out;
}

std::vector<double> hop1_desired_power_samples(NetworkConfig const& cfg,
                                               std::size_t n,
                                               std::uint64_t seed)
{
    validate_config(cfg);
    RiceanParams const rp = ricean_params(cfg.k_factor, cfg.omega);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = draw_hop1_typical(cfg, rp, {seed, domain::kHop1, i})
                     .desired_power;
    return out;
}

std::vector<double> hop2_desired_power_samples(NetworkConfig const& cfg,
                                               std::size_t n,
                                               std::uint64_t seed)
{
    validate_config(cfg);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = draw_hop2_typical(cfg, {seed, domain::kHop2, i}).desired_power;
    return out;
}

double ks_statistic_gamma(std::span<double const> samples, double shape,
                          double scale)
{
    if (samples.empty())
        throw ConfigError("ks_statistic_gamma needs samples");
    if (!(shape > 0) || !(scale > 0))
        throw ConfigError("ks_statistic_gamma needs shape, scale > 0");
    std::vector<double> x(samples.begin(), samples.end());
    std::sort(x.begin(), x.end());
    double const n = static_cast<double>(x.size());
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        double const f
            = x[i] <= 0 ? 0.0 : boost::math::gamma_p(shape, x[i] / scale);
        d = std::max({d, f - static_cast<double>(i) / n,
                      static_cast<double>(i + 1) / n - f});
    }
    return d;
}

}  // namespace fdnet
