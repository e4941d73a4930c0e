#include <doctest.h>

#include <cmath>
#include <random>

#include "fdnet/derivative_series.hpp"
#include "fdnet/model.hpp"
#include "oracles.hpp"

using namespace fdnet;
using oracle::mp;

namespace {

DerivativeSeries poly_series(std::vector<double> const& coef, double s,
                             int order)
{
    // derivatives of sum_k coef[k] s^k
    std::vector<double> v(order + 1, 0.0);
    for (int j = 0; j <= order; ++j)
        for (int k = j; k < static_cast<int>(coef.size()); ++k)
        {
            double falling = 1;
            for (int m = 0; m < j; ++m)
                falling *= k - m;
            v[j] += coef[k] * falling * std::pow(s, k - j);
        }
    return {s, v};
}

mp poly_eval(std::vector<double> const& coef, mp const& s)
{
    mp acc = 0;
    for (auto it = coef.rbegin(); it != coef.rend(); ++it)
        acc = acc * s + mp(*it);
    return acc;
}

void check_against(DerivativeSeries const& got,
                   std::vector<double> const& want, double tol)
{
    REQUIRE(got.order() + 1 == static_cast<int>(want.size()));
    for (std::size_t j = 0; j < want.size(); ++j)
    {
        INFO("order " << j << " got " << got[j] << " want " << want[j]);
        if (std::abs(want[j]) < 1e-300)
            CHECK(std::abs(got[j]) < 1e-290);
        else
            CHECK(oracle::rel_err(got[j], want[j]) <= tol);
    }
}

}  // namespace

TEST_SUITE("derivatives")
{
    TEST_CASE("series construction")
    {
        CHECK_THROWS_AS(DerivativeSeries(0, {}), ConfigError);
        CHECK_THROWS_AS(DerivativeSeries(0, {1, NAN}), NumericError);
        CHECK_THROWS_AS(DerivativeSeries(0, {INFINITY}), NumericError);
        auto const c = DerivativeSeries::constant(2, 3, 4);
        CHECK(c.order() == 4);
        CHECK(c[0] == 3);
        for (int j = 1; j <= 4; ++j)
            CHECK(c[j] == 0);
        CHECK(c.scaled(2)[0] == 6);
    }

    TEST_CASE("factorials and binomials")
    {
        CHECK(factorial(0) == 1);
        CHECK(factorial(10) == 3628800);
        CHECK(binomial(7, 3) == 35);
        CHECK(binomial(60, 30) == 118264581564861424.0);
        CHECK_THROWS_AS(factorial(-1), ConfigError);
    }

    TEST_CASE("Leibniz examples")
    {
        auto const sq = poly_series({0, 0, 1}, 1, 2);
        auto const p = leibniz_product(sq, sq);
        CHECK(p[0] == 1);
        CHECK(p[1] == 4);
        CHECK(p[2] == 12);

        auto const one = DerivativeSeries::constant(1, 1, 2);
        auto const id = leibniz_product(sq, one);
        for (int j = 0; j <= 2; ++j)
            CHECK(id[j] == sq[j]);

        CHECK_THROWS_AS(leibniz_product(sq, DerivativeSeries::constant(1, 1, 3)),
                        ConfigError);
        CHECK_THROWS_AS(leibniz_product(sq, DerivativeSeries::constant(2, 1, 2)),
                        ConfigError);
    }

    TEST_CASE("Leibniz is commutative")
    {
        std::mt19937_64 rng(1);
        std::normal_distribution<double> g;
        for (int i = 0; i < 100; ++i)
        {
            std::vector<double> a(8), b(8);
            for (auto& x : a)
                x = g(rng);
            for (auto& x : b)
                x = g(rng);
            auto const fg = leibniz_product({0.3, a}, {0.3, b});
            auto const gf = leibniz_product({0.3, b}, {0.3, a});
            for (int j = 0; j < 8; ++j)
                CHECK(fg[j] == doctest::Approx(gf[j]).epsilon(1e-14));
        }
    }

    TEST_CASE("exp of affine and of -s^2")
    {
        auto const e = exp_compose({0.5, {0.2, -1.5, 0, 0, 0, 0}});
        for (int n = 0; n <= 5; ++n)
            CHECK(e[n] == doctest::Approx(std::pow(-1.5, n) * std::exp(0.2))
                               .epsilon(1e-14));

        auto const g = exp_compose(poly_series({0, 0, -1}, 1, 3));
        double const ei = std::exp(-1.0);
        check_against(g, {ei, -2 * ei, 2 * ei, 4 * ei}, 1e-14);

        CHECK_THROWS_AS(exp_compose({0, {800, 1}}), NumericError);
    }

    TEST_CASE("inverse power examples")
    {
        auto const z = inv_power_series(0, 1.7, 3, 4);
        CHECK(z[0] == 1);
        for (int j = 1; j <= 4; ++j)
            CHECK(z[j] == 0);
        auto const g = inv_power_series(1, 1, 0, 2);
        CHECK(g[0] == 1);
        CHECK(g[1] == -1);
        CHECK(g[2] == 2);
        CHECK_THROWS_AS(inv_power_series(-1, 1, 1, 2), NumericError);
    }

    TEST_CASE("power law examples")
    {
        auto const p = power_law_series(3, 0.5, 1, 3);
        CHECK(p[0] == doctest::Approx(3));
        CHECK(p[1] == doctest::Approx(1.5));
        CHECK(p[2] == doctest::Approx(-0.75));
        CHECK(p[3] == doctest::Approx(1.125));
        CHECK_THROWS_AS(power_law_series(1, 0.5, 0, 2), ConfigError);
    }

    TEST_CASE("alternating Taylor sum of a pure exponential")
    {
        // L(s) = exp(-c s): sum_{n<N} (c s)^n/n! e^{-c s} (Poisson tail).
        double const c = 0.7, s = 2.0;
        for (int order = 0; order <= 7; ++order)
        {
            std::vector<double> v(order + 1);
            for (int n = 0; n <= order; ++n)
                v[n] = std::pow(-c, n) * std::exp(-c * s);
            double want = 0;
            for (int n = 0; n <= order; ++n)
                want += std::pow(c * s, n) / factorial(n) * std::exp(-c * s);
            CHECK(alternating_taylor_sum({s, v})
                  == doctest::Approx(want).epsilon(1e-14));
        }
    }

    TEST_CASE("closed-form series against multiprecision differences")
    {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> u(0, 1);
        double worst = 0;
        for (int draw = 0; draw < 100; ++draw)
        {
            double const s = 0.1 + 3 * u(rng);
            double const c = std::pow(10, -2 + 3 * u(rng));
            double const a = 0.2 + 4 * u(rng);
            int const order = 7;

            auto const ip = inv_power_series(c, a, s, order);
            auto const ip_fd = oracle::mp_derivatives(
                [&](mp const& x) { return pow(1 + mp(c) * x, -mp(a)); }, s,
                order);

            std::vector<double> pc(4), qc(3);
            for (auto& x : pc)
                x = 2 * u(rng) - 1;
            for (auto& x : qc)
                x = 2 * u(rng) - 1;
            auto const lp = leibniz_product(poly_series(pc, s, order),
                                            ip);
            auto const lp_fd = oracle::mp_derivatives(
                [&](mp const& x) {
                    return poly_eval(pc, x) * pow(1 + mp(c) * x, -mp(a));
                },
                s, order);

            auto const ec = exp_compose(poly_series(qc, s, order));
            auto const ec_fd = oracle::mp_derivatives(
                [&](mp const& x) { return exp(poly_eval(qc, x)); }, s, order);

            double const e = 2 * u(rng) - 1;
            auto const pl = power_law_series(c, e, s, order);
            auto const pl_fd = oracle::mp_derivatives(
                [&](mp const& x) { return mp(c) * pow(x, mp(e)); }, s, order);

            for (int j = 0; j <= order; ++j)
            {
                for (auto [got, want] :
                     {std::pair{ip[j], ip_fd[j]}, std::pair{lp[j], lp_fd[j]},
                      std::pair{ec[j], ec_fd[j]}, std::pair{pl[j], pl_fd[j]}})
                {
                    if (std::abs(want) < 1e-300)
                        continue;
                    double const err = oracle::rel_err(got, want);
                    worst = std::max(worst, err);
                    CHECK(err <= 1e-8);
                }
            }
        }
        MESSAGE("worst relative error " << worst);
    }
}
