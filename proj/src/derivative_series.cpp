#include "fdnet/derivative_series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fdnet/model.hpp"

namespace fdnet {

namespace {

constexpr int kMaxFactorial = 170;

constexpr std::array<double, kMaxFactorial + 1> make_factorials()
{
    std::array<double, kMaxFactorial + 1> f{};
    f[0] = 1;
    for (int i = 1; i <= kMaxFactorial; ++i)
        f[i] = f[i - 1] * i;
    return f;
}

constexpr auto kFactorials = make_factorials();

void check_order(int order)
{
    if (order < 0)
        throw ConfigError("derivative order must be non-negative");
}

}  // namespace

double factorial(int n)
{
    if (n < 0 || n > kMaxFactorial)
        throw ConfigError("factorial argument out of range: "
                          + std::to_string(n));
    return kFactorials[n];
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    double c = 1;
    for (int i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return std::round(c);
}

DerivativeSeries::DerivativeSeries(double point, std::vector<double> values)
    : point_(point), values_(std::move(values))
{
    if (values_.empty())
        throw ConfigError("derivative series needs at least one entry");
    for (std::size_t j = 0; j < values_.size(); ++j)
    {
        if (!std::isfinite(values_[j]))
        {
            throw NumericError("non-finite derivative of order "
                               + std::to_string(j));
        }
    }
}

DerivativeSeries DerivativeSeries::constant(double point, double c, int order)
{
    check_order(order);
    std::vector<double> v(order + 1, 0.0);
    v[0] = c;
    return {point, std::move(v)};
}

DerivativeSeries DerivativeSeries::scaled(double factor) const
{
    std::vector<double> v(values_);
    for (double& x : v)
        x *= factor;
    return {point_, std::move(v)};
}

DerivativeSeries leibniz_product(DerivativeSeries const& f,
                                 DerivativeSeries const& g)
{
    if (f.order() != g.order())
        throw ConfigError("leibniz_product: order mismatch");
    if (f.point() != g.point())
        throw ConfigError("leibniz_product: series taken at different points");
    int const n = f.order();
    std::vector<double> out(n + 1, 0.0);
    for (int m = 0; m <= n; ++m)
    {
        double acc = 0;
        for (int k = 0; k <= m; ++k)
            acc += binomial(m, k) * f[k] * g[m - k];
        out[m] = acc;
    }
    return {f.point(), std::move(out)};
}

DerivativeSeries exp_compose(DerivativeSeries const& inner)
{
    int const n = inner.order();
    double const base = std::exp(inner[0]);
    if (!std::isfinite(base))
        throw NumericError("exp_compose: exponent overflow");

    // Complete Bell polynomials: B_0 = 1,
    // B_{m+1} = sum_k C(m,k) B_{m-k} x_{k+1}.
    std::vector<double> bell(n + 1, 0.0);
    bell[0] = 1;
    for (int m = 0; m < n; ++m)
    {
        double acc = 0;
        for (int k = 0; k <= m; ++k)
            acc += binomial(m, k) * bell[m - k] * inner[k + 1];
        bell[m + 1] = acc;
    }
    for (double& b : bell)
        b *= base;
    return {inner.point(), std::move(bell)};
}

DerivativeSeries inv_power_series(double c, double a_exp, double s, int order)
{
    check_order(order);
    double const t = 1 + c * s;
    if (!(t > 0))
        throw NumericError("inv_power_series: 1 + c*s must be positive");
    std::vector<double> v(order + 1);
    v[0] = std::pow(t, -a_exp);
    for (int n = 1; n <= order; ++n)
        v[n] = v[n - 1] * (-c) * (a_exp + n - 1) / t;
    return {s, std::move(v)};
}

DerivativeSeries power_law_series(double coef, double exponent, double s,
                                  int order)
{
    check_order(order);
    if (!(s > 0))
        throw ConfigError("power_law_series requires s > 0");
    std::vector<double> v(order + 1);
    v[0] = coef * std::pow(s, exponent);
    for (int n = 1; n <= order; ++n)
        v[n] = v[n - 1] * (exponent - n + 1) / s;
    return {s, std::move(v)};
}

double alternating_taylor_sum(DerivativeSeries const& laplace)
{
    double const s = laplace.point();
    double weight = 1;
    double acc = 0;
    for (int n = 0; n <= laplace.order(); ++n)
    {
        if (n > 0)
            weight *= -s / n;
        acc += weight * laplace[n];
    }
    return acc;
}

}  // namespace fdnet
