#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fdnet/parallel.hpp"

namespace fdnet {

/// Vector-valued integrand: writes dim values at abscissa x into out.
using VectorIntegrand = std::function<void(double x, std::span<double> out)>;

struct VectorIntegral
{
    std::vector<double> value;
    std::vector<double> abs_error;
    int intervals = 0;
};

struct AdaptiveOptions
{
    double rel_tol = 1e-8;
    int max_intervals = 2000;
    Execution exec = Execution::Parallel;
};

/// Globally adaptive 21-point Gauss-Kronrod integration of a vector
/// integrand over [breakpoints.front(), breakpoints.back()].
///
/// Every component must reach |error| <= rel_tol * |value|. Intervals with
/// the worst normalized error are bisected in batches; node evaluations
/// inside a batch run in parallel when exec is Parallel. The final sum is a
/// pairwise reduction in interval order, so the result does not depend on
/// the thread count. Throws NumericError when max_intervals is exhausted.
VectorIntegral integrate_gk21(VectorIntegrand const& f, std::size_t dim,
                              std::span<double const> breakpoints,
                              AdaptiveOptions const& opts);

/// Pairwise (cascade) sum; deterministic for a given input order.
double pairwise_sum(std::span<double const> values);

}  // namespace fdnet
