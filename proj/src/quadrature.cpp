#include "fdnet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fdnet/model.hpp"

#ifdef _OPENMP
#    include <omp.h>
#endif

namespace fdnet {

int max_threads()
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

// 21 nodes per panel: index 0 is the centre, then (+x_i, -x_i) pairs.
constexpr int kNodes = 21;
constexpr int kBatch = 8;
constexpr double kTiny = 1e-300;

struct Interval
{
    double a;
    double b;
    std::vector<double> est;
    std::vector<double> err;
};

std::array<double, kNodes> panel_nodes(double a, double b)
{
    auto const& x = Kronrod::abscissa();
    double const c = 0.5 * (a + b);
    double const h = 0.5 * (b - a);
    std::array<double, kNodes> nodes{};
    nodes[0] = c;
    for (int i = 1; i <= 10; ++i)
    {
        nodes[2 * i - 1] = c - h * x[i];
        nodes[2 * i] = c + h * x[i];
    }
    return nodes;
}

// Combines the 21 node values of one panel into Kronrod and Gauss sums.
void reduce_panel(double a, double b, std::span<double const> vals,
                  std::size_t dim, Interval& out)
{
    auto const& wk = Kronrod::weights();
    auto const& wg = Gauss::weights();
    double const h = 0.5 * (b - a);
    out.a = a;
    out.b = b;
    out.est.assign(dim, 0.0);
    out.err.assign(dim, 0.0);
    for (std::size_t d = 0; d < dim; ++d)
    {
        double kron = wk[0] * vals[d];
        double gauss = 0;
        for (int i = 1; i <= 10; ++i)
        {
            double const pair = vals[(2 * i - 1) * dim + d]
                                + vals[(2 * i) * dim + d];
            kron += wk[i] * pair;
            // Gauss nodes sit at the odd Kronrod indices.
            if (i % 2 == 1)
                gauss += wg[i / 2] * pair;
        }
        out.est[d] = h * kron;
        out.err[d] = std::abs(h * (kron - gauss));
    }
}

// Evaluates all panels in [panels] and writes reduced intervals.
void evaluate_panels(VectorIntegrand const& f, std::size_t dim,
                     std::span<std::pair<double, double> const> panels,
                     std::vector<Interval>& out, Execution exec)
{
    std::size_t const n_eval = panels.size() * kNodes;
    std::vector<double> xs(n_eval);
    for (std::size_t p = 0; p < panels.size(); ++p)
    {
        auto nodes = panel_nodes(panels[p].first, panels[p].second);
        std::copy(nodes.begin(), nodes.end(), xs.begin() + p * kNodes);
    }
    std::vector<double> vals(n_eval * dim, 0.0);

    auto eval_one = [&](std::size_t i) {
        f(xs[i], std::span<double>(vals.data() + i * dim, dim));
    };
    if (exec == Execution::Parallel)
    {
        std::ptrdiff_t const n = static_cast<std::ptrdiff_t>(n_eval);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            eval_one(static_cast<std::size_t>(i));
    }
    else
    {
        for (std::size_t i = 0; i < n_eval; ++i)
            eval_one(i);
    }

    out.resize(panels.size());
    for (std::size_t p = 0; p < panels.size(); ++p)
    {
        reduce_panel(panels[p].first, panels[p].second,
                     std::span<double const>(vals.data() + p * kNodes * dim,
                                             kNodes * dim),
                     dim, out[p]);
    }
}

}  // namespace

double pairwise_sum(std::span<double const> values)
{
    if (values.size() <= 8)
    {
        double acc = 0;
        for (double v : values)
            acc += v;
        return acc;
    }
    std::size_t const half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

VectorIntegral integrate_gk21(VectorIntegrand const& f, std::size_t dim,
                              std::span<double const> breakpoints,
                              AdaptiveOptions const& opts)
{
    if (breakpoints.size() < 2 || dim == 0)
        throw ConfigError("integrate_gk21 needs two breakpoints and dim > 0");
    if (!(opts.rel_tol > 0))
        throw ConfigError("integrate_gk21 requires rel_tol > 0");

    std::vector<std::pair<double, double>> panels;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw ConfigError("integrate_gk21: breakpoints must increase");
        panels.emplace_back(breakpoints[i], breakpoints[i + 1]);
    }

    std::vector<Interval> intervals;
    evaluate_panels(f, dim, panels, intervals, opts.exec);

    std::vector<double> total(dim);
    std::vector<double> total_err(dim);
    std::vector<double> column;
    auto tally = [&] {
        column.resize(intervals.size());
        for (std::size_t d = 0; d < dim; ++d)
        {
            for (std::size_t i = 0; i < intervals.size(); ++i)
                column[i] = intervals[i].est[d];
            total[d] = pairwise_sum(column);
            for (std::size_t i = 0; i < intervals.size(); ++i)
                column[i] = intervals[i].err[d];
            total_err[d] = pairwise_sum(column);
        }
    };

    while (true)
    {
        tally();
        bool converged = true;
        for (std::size_t d = 0; d < dim; ++d)
        {
            if (total_err[d] > opts.rel_tol * std::abs(total[d]) + kTiny)
                converged = false;
        }
        if (converged)
            break;

        if (static_cast<int>(intervals.size()) >= opts.max_intervals)
        {
            double worst = 0;
            for (std::size_t d = 0; d < dim; ++d)
            {
                worst = std::max(worst, total_err[d]
                                            / std::max(std::abs(total[d]),
                                                       kTiny));
            }
            std::ostringstream os;
            os << "adaptive quadrature did not converge after "
               << intervals.size() << " intervals (relative error estimate "
               << worst << ", requested " << opts.rel_tol << ")";
            throw NumericError(os.str());
        }

        // Rank intervals by their worst normalized component error.
        std::vector<std::pair<double, std::size_t>> score;
        score.reserve(intervals.size());
        for (std::size_t i = 0; i < intervals.size(); ++i)
        {
            auto const& iv = intervals[i];
            double width = iv.b - iv.a;
            if (width <= 1e-13 * std::max(std::abs(iv.a), std::abs(iv.b)))
                continue;
            double s = 0;
            for (std::size_t d = 0; d < dim; ++d)
                s = std::max(s, iv.err[d] / std::max(std::abs(total[d]), kTiny));
            score.emplace_back(s, i);
        }
        if (score.empty())
            throw NumericError("adaptive quadrature: intervals exhausted");
        std::size_t const take = std::min<std::size_t>(kBatch, score.size());
        std::partial_sort(score.begin(), score.begin() + take, score.end(),
                          [](auto const& l, auto const& r) {
                              return l.first > r.first
                                     || (l.first == r.first
                                         && l.second < r.second);
                          });

        std::vector<std::size_t> chosen;
        for (std::size_t k = 0; k < take; ++k)
            chosen.push_back(score[k].second);
        std::sort(chosen.begin(), chosen.end());

        std::vector<std::pair<double, double>> halves;
        for (std::size_t idx : chosen)
        {
            double const a = intervals[idx].a;
            double const b = intervals[idx].b;
            double const m = 0.5 * (a + b);
            halves.emplace_back(a, m);
            halves.emplace_back(m, b);
        }
        std::vector<Interval> fresh;
        evaluate_panels(f, dim, halves, fresh, opts.exec);

        // Rebuild in positional order so the reduction order is fixed.
        std::vector<Interval> next;
        next.reserve(intervals.size() + chosen.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < intervals.size(); ++i)
        {
            if (c < chosen.size() && chosen[c] == i)
            {
                next.push_back(std::move(fresh[2 * c]));
                next.push_back(std::move(fresh[2 * c + 1]));
                ++c;
            }
            else
            {
                next.push_back(std::move(intervals[i]));
            }
        }
        intervals = std::move(next);
    }

    VectorIntegral result;
    result.value = total;
    result.abs_error = total_err;
    result.intervals = static_cast<int>(intervals.size());
    return result;
}

}  // namespace fdnet
