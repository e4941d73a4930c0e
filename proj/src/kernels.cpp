#include "fdnet/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "fdnet/quadrature.hpp"

namespace fdnet {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// x^(alpha/2) for x = distance squared, with a fast path for alpha = 4.
inline double pow_half_alpha(double d2, double alpha)
{
    if (alpha == 4.0)
        return d2 * d2;
    return std::pow(d2, 0.5 * alpha);
}

// The kernel 1/(1 + s p / x) for x = distance^alpha, split into
//   inv  = x / (x + s p)
//   comp = s p / (x + s p) = 1 - inv
//   g    = p / (x + s p)
// without forming inf/inf when x over- or underflows.
struct KernelTerms
{
    double inv;
    double comp;
    double g;
};

inline KernelTerms kernel_terms(double x, double s, double p)
{
    double const sp = s * p;
    if (sp == 0)
        return {1.0, 0.0, p / x};
    if (x >= sp)
    {
        double const q = sp / x;
        double const inv = 1 / (1 + q);
        return {inv, q * inv, (p / x) * inv};
    }
    double const q = x / sp;
    double const comp = 1 / (1 + q);
    return {q * comp, comp, comp / s};
}

struct AngularSums
{
    // raw[j] = int g^j inv dphi; the derivative is (-1)^j j! raw[j].
    std::vector<double> raw;
    double complement = 0;  // int comp dphi = 2 pi - Psi
    int nodes = 0;
};

struct AngularGeometry
{
    double r_bh;
    double rho_bh;
    double alpha;
};

// Adds f(phi) for cos^2(phi/2) = c2 into acc (size order + 2, last slot is
// the complement) with the given weight.
inline void angular_node(AngularGeometry const& geo, double s, double r,
                         double c2, double weight, std::span<double> acc)
{
    double const diff = geo.r_bh - r;
    double const d2 = diff * diff + 4 * geo.r_bh * r * c2;
    double const x = pow_half_alpha(d2, geo.alpha);
    KernelTerms const t = kernel_terms(x, s, geo.rho_bh);
    std::size_t const order = acc.size() - 2;
    double term = t.inv;
    acc[0] += weight * term;
    for (std::size_t j = 1; j <= order; ++j)
    {
        term *= t.g;
        acc[j] += weight * term;
    }
    acc[order + 1] += weight * t.comp;
}

// Trapezoid rule over the full period using the symmetry phi -> 2 pi - phi.
// With M half-range panels the nodes are phi_k = pi k / M, k = 0..M, and
// the endpoint nodes 0 and pi carry half the interior weight.
AngularSums angular_sums(AngularGeometry const& geo, double s, double r,
                         int order, double tol, int start_nodes,
                         int max_nodes)
{
    std::size_t const dim = static_cast<std::size_t>(order) + 2;
    std::vector<double> ends(dim, 0.0);
    std::vector<double> interior(dim, 0.0);
    angular_node(geo, s, r, 1.0, 1.0, ends);
    angular_node(geo, s, r, 0.0, 1.0, ends);

    int m = start_nodes / 2;
    for (int k = 1; k < m; ++k)
    {
        double const c = std::cos(std::numbers::pi * k / (2.0 * m));
        angular_node(geo, s, r, c * c, 1.0, interior);
    }

    auto estimate = [&](int half, std::vector<double>& out) {
        double const h = std::numbers::pi / half;
        for (std::size_t j = 0; j < dim; ++j)
            out[j] = h * (ends[j] + 2 * interior[j]);
    };

    std::vector<double> prev(dim);
    std::vector<double> cur(dim);
    estimate(m, prev);
    while (true)
    {
        if (2 * m > max_nodes / 2)
        {
            std::ostringstream os;
            os << "angular integral did not converge with " << 2 * m
               << " nodes (s = " << s << ", r = " << r << ")";
            throw NumericError(os.str());
        }
        // New nodes of the doubled grid sit at the odd indices.
        for (int k = 0; k < m; ++k)
        {
            double const c
                = std::cos(std::numbers::pi * (2 * k + 1) / (4.0 * m));
            angular_node(geo, s, r, c * c, 1.0, interior);
        }
        m *= 2;
        estimate(m, cur);
        bool converged = true;
        for (std::size_t j = 0; j < dim; ++j)
        {
            if (!(std::abs(cur[j] - prev[j]) <= tol * std::abs(cur[j]) + 1e-300))
            {
                converged = false;
                break;
            }
        }
        if (converged)
            break;
        std::swap(prev, cur);
    }

    AngularSums out;
    out.raw.assign(cur.begin(), cur.end() - 1);
    out.complement = cur.back();
    out.nodes = 2 * m;
    return out;
}

AngularGeometry geometry(NetworkConfig const& cfg)
{
    return {cfg.r_bh, cfg.rho_bh, cfg.alpha};
}

double angular_tol(QuadratureSettings const& q)
{
    return q.rel_tol / 10;
}

void check_order(int order)
{
    if (order < 0)
        throw ConfigError("derivative order must be non-negative");
}

void check_s(double s)
{
    if (!(s >= 0) || !std::isfinite(s))
        throw ConfigError("Laplace abscissa s must be finite and >= 0");
}

// Radial integrand of Upsilon and its derivatives at radius r (without
// the change of variables).
void radial_integrand(NetworkConfig const& cfg, QuadratureSettings const& q,
                      double s, double r, int order, std::span<double> out)
{
    AngularSums const ang
        = angular_sums(geometry(cfg), s, r, order, angular_tol(q),
                       q.angular_nodes, q.max_angular_nodes);
    double const x = pow_half_alpha(r * r, cfg.alpha);
    KernelTerms const a = kernel_terms(x, s, cfg.rho_fd);

    // 2 pi - A Psi = 2 pi (1 - A) + A (2 pi - Psi)
    out[0] = (kTwoPi * a.comp + a.inv * ang.complement) * r;

    if (order == 0)
        return;
    // A^(i) = (-1)^i i! gA^i invA ; Psi^(k) = (-1)^k k! raw[k].
    // Every product carries the sign (-1)^j, so entry j is
    // (-1)^(j+1) sum_i C(j,i) i! (j-i)! gA^i invA raw[j-i] r.
    std::vector<double> apow(order + 1);
    apow[0] = a.inv;
    for (int i = 1; i <= order; ++i)
        apow[i] = apow[i - 1] * a.g;
    for (int j = 1; j <= order; ++j)
    {
        double acc = 0;
        for (int i = 0; i <= j; ++i)
            acc += factorial(j) * apow[i] * ang.raw[j - i];
        double const sign = (j % 2 == 1) ? 1.0 : -1.0;
        out[j] = sign * acc * r;
    }
}

}  // namespace

QuadratureSettings const& validate_settings(QuadratureSettings const& q)
{
    if (!(q.rel_tol > 0))
        throw ConfigError("quadrature rel_tol must be > 0");
    if (!(q.r_max_factor >= 1))
        throw ConfigError("quadrature r_max_factor must be >= 1");
    if (q.angular_nodes < 8 || q.angular_nodes % 2 != 0)
        throw ConfigError("angular_nodes must be even and >= 8");
    if (q.max_angular_nodes < q.angular_nodes)
        throw ConfigError("max_angular_nodes must be >= angular_nodes");
    if (q.max_radial_intervals < 1)
        throw ConfigError("max_radial_intervals must be >= 1");
    return q;
}

double psi(double s, double r, NetworkConfig const& cfg,
           QuadratureSettings const& q)
{
    return psi_derivatives(s, r, 0, cfg, q)[0];
}

DerivativeSeries psi_derivatives(double s, double r, int order,
                                 NetworkConfig const& cfg,
                                 QuadratureSettings const& q)
{
    validate_settings(q);
    check_order(order);
    check_s(s);
    if (!(r >= 0))
        throw ConfigError("psi requires r >= 0");
    if (s == 0 && order == 0)
        return DerivativeSeries::constant(s, kTwoPi, 0);

    AngularSums const ang
        = angular_sums(geometry(cfg), s, r, order, angular_tol(q),
                       q.angular_nodes, q.max_angular_nodes);
    std::vector<double> v(order + 1);
    for (int j = 0; j <= order; ++j)
    {
        double const sign = (j % 2 == 0) ? 1.0 : -1.0;
        v[j] = sign * factorial(j) * ang.raw[j];
    }
    return {s, std::move(v)};
}

double upsilon(double s, NetworkConfig const& cfg, QuadratureSettings const& q)
{
    return upsilon_derivatives(s, 0, cfg, q)[0];
}

DerivativeSeries upsilon_derivatives(double s, int order,
                                     NetworkConfig const& cfg,
                                     QuadratureSettings const& q)
{
    validate_settings(q);
    check_order(order);
    check_s(s);
    if (s == 0)
    {
        if (order > 0)
            throw ConfigError("upsilon derivatives require s > 0");
        return DerivativeSeries::constant(s, 0.0, 0);
    }
    if (!(cfg.alpha > 2))
        throw ConfigError("upsilon requires alpha > 2");

    double const alpha = cfg.alpha;
    double const scale_fd = std::pow(s * cfg.rho_fd, 1 / alpha);
    double const scale_bh = std::pow(s * cfg.rho_bh, 1 / alpha);
    double const r_split
        = q.r_max_factor * std::max({cfg.r_bh, scale_fd, scale_bh});

    // Tail r > r_split: r = r_split u^(-p), p = 1/(alpha - 2), u in (0, 1].
    // The integrand decays like r^(1-alpha), which makes the mapped
    // integrand tend to a constant as u -> 0.
    double const p = 1 / (alpha - 2);
    double const log_r_cap = 600 / alpha;
    double const tail_const
        = kTwoPi * (cfg.rho_fd + cfg.rho_bh) * p * std::pow(r_split, 2 - alpha);

    VectorIntegrand f = [&](double x, std::span<double> out) {
        if (x <= r_split)
        {
            radial_integrand(cfg, q, s, x, order, out);
            return;
        }
        double const u = 1 - (x - r_split);
        double const log_r = std::log(r_split) - p * std::log(u);
        if (log_r > log_r_cap)
        {
            // Far tail: leading-order asymptotics of the mapped integrand.
            std::fill(out.begin(), out.end(), 0.0);
            out[0] = s * tail_const;
            if (order >= 1)
                out[1] = tail_const;
            return;
        }
        double const r = std::exp(log_r);
        radial_integrand(cfg, q, s, r, order, out);
        double const jac = p * r / u;
        for (double& v : out)
            v *= jac;
    };

    std::vector<double> bps{0.0};
    for (double b : {scale_fd, scale_bh, cfg.r_bh})
    {
        if (b > 0 && b < r_split)
            bps.push_back(b);
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end(),
                          [](double l, double r) {
                              return std::abs(l - r) <= 1e-12 * std::max(l, r);
                          }),
              bps.end());
    bps.push_back(r_split);
    bps.push_back(r_split + 1);

    AdaptiveOptions opts;
    opts.rel_tol = q.rel_tol;
    opts.max_intervals = q.max_radial_intervals;
    opts.exec = q.exec;
    VectorIntegral const res
        = integrate_gk21(f, static_cast<std::size_t>(order) + 1, bps, opts);
    return {s, res.value};
}

double bound_kernel_constant(double alpha)
{
    if (!(alpha > 2))
        throw ConfigError("bound constant requires alpha > 2");
    double const pi = std::numbers::pi;
    return pi * pi / (alpha * std::sin(2 * pi / alpha));
}

namespace {

double bound_coefficient(BoundKind which, NetworkConfig const& cfg)
{
    double const lead = which == BoundKind::Min ? 1 + 2 / cfg.alpha : 2.0;
    return lead * (cfg.rho_fd + cfg.rho_bh) * bound_kernel_constant(cfg.alpha);
}

}  // namespace

double upsilon_bound(double s, BoundKind which, NetworkConfig const& cfg)
{
    check_s(s);
    return bound_coefficient(which, cfg) * std::pow(s, 2 / cfg.alpha);
}

DerivativeSeries upsilon_bound_derivatives(double s, BoundKind which,
                                           int order,
                                           NetworkConfig const& cfg)
{
    check_order(order);
    if (!(s > 0))
        throw ConfigError("bound derivatives require s > 0");
    return power_law_series(bound_coefficient(which, cfg), 2 / cfg.alpha, s,
                            order);
}

}  // namespace fdnet
