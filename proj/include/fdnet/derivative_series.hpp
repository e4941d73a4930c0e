#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fdnet {

/// Value and derivatives d^0 f .. d^n f of a scalar function at one point.
class DerivativeSeries
{
  public:
    /// Throws ConfigError if values is empty, NumericError if any entry is
    /// not finite.
    DerivativeSeries(double point, std::vector<double> values);

    /// Series of a constant: (c, 0, 0, ...).
    static DerivativeSeries constant(double point, double c, int order);

    double point() const { return point_; }
    int order() const { return static_cast<int>(values_.size()) - 1; }
    std::span<double const> values() const { return values_; }
    double operator[](std::size_t j) const { return values_[j]; }

    DerivativeSeries scaled(double factor) const;

  private:
    double point_;
    std::vector<double> values_;
};

/// General Leibniz rule: derivatives of f*g.
DerivativeSeries leibniz_product(DerivativeSeries const& f,
                                 DerivativeSeries const& g);

/// Faa di Bruno with an exponential outer function: derivatives of
/// exp(inner(s)) through complete Bell polynomials of the inner
/// derivatives.
DerivativeSeries exp_compose(DerivativeSeries const& inner);

/// Derivatives of (1 + c s)^(-a_exp); throws NumericError if 1 + c s <= 0.
DerivativeSeries inv_power_series(double c, double a_exp, double s,
                                  int order);

/// Derivatives of coef * s^exponent for s > 0 (power rule).
DerivativeSeries power_law_series(double coef, double exponent, double s,
                                  int order);

/// sum_{n=0}^{order} (-s)^n / n! * L^(n)(s), the tail-probability sum of a
/// Gamma(order+1, 1) variable against an interference with Laplace
/// transform L.
double alternating_taylor_sum(DerivativeSeries const& laplace);

/// Binomial coefficient as an exact double for n <= 60.
double binomial(int n, int k);
/// n! as a double (exact for n <= 22).
double factorial(int n);

}  // namespace fdnet
