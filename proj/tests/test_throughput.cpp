#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fdnet/model.hpp"
#include "fdnet/success.hpp"
#include "fdnet/throughput.hpp"

using namespace fdnet;

TEST_SUITE("throughput")
{
    TEST_CASE("half-duplex reference value")
    {
        NetworkConfig const cfg;
        CHECK(t_hd_max(cfg) == doctest::Approx(0.91162).epsilon(1e-5));
        double const expo = -1e-3 * 1.5 * std::numbers::pi * std::numbers::pi * 25 / 4;
        CHECK(t_hd_max(cfg) == doctest::Approx(std::exp(expo)).epsilon(1e-14));
    }

    TEST_CASE("interference-free limits")
    {
        NetworkConfig cfg;
        cfg.lambda = 0;
        cfg.omega = 1e-300;
        cfg.theta = 3;
        CHECK(t_fd_min(cfg) == doctest::Approx(2 * 2).epsilon(1e-12));
        CHECK(t_hd_max(cfg) == doctest::Approx(2).epsilon(1e-14));
        for (int n : {1, 2, 8})
        {
            cfg.n_rx = cfg.n_tx = n;
            CHECK(tg_min(cfg).tg_min == doctest::Approx(2).epsilon(1e-12));
        }
        cfg.n_rx = cfg.n_tx = 1;
        CHECK(fd_advantage_condition(cfg));
    }

    TEST_CASE("zero threshold")
    {
        NetworkConfig cfg;
        cfg.theta = 0;
        CHECK(t_fd_min(cfg) == 0);
        CHECK(t_hd_max(cfg) == 0);
        CHECK_THROWS_AS(tg_min(cfg), NumericError);
    }

    TEST_CASE("consistency with the success module")
    {
        NetworkConfig const cfg;
        CHECK(t_fd_min(cfg)
              == doctest::Approx(2 * p_suc_first(cfg, EvalMode::LowerBound))
                     .epsilon(1e-14));
        auto const r = tg_min(cfg);
        CHECK(r.t_fd_min >= 0);
        CHECK(r.t_hd_max >= 0);
        CHECK(std::abs(r.tg_min - r.t_fd_min / r.t_hd_max) <= 1e-12 * r.tg_min);
        REQUIRE(r.condition_holds.has_value());
        CHECK(*r.condition_holds);
        CHECK(r.tg_min > 1);
    }

    TEST_CASE("gain stays finite when both throughputs underflow")
    {
        NetworkConfig cfg;
        cfg.lambda = 0.1;
        cfg.alpha = 2.1;
        cfg.r_bh = 30;
        cfg.rho_bh = 0.01;
        for (int n : {1, 4})
        {
            cfg.n_rx = cfg.n_tx = n;
            auto const r = tg_min(cfg);
            CHECK(r.t_hd_max == 0);
            CHECK(std::isfinite(r.tg_min));
            CHECK(r.tg_min >= 0);
        }
        cfg.n_rx = cfg.n_tx = 1;
        CHECK(fd_advantage_condition(cfg) == (tg_min(cfg).tg_min >= 1));
    }

    TEST_CASE("condition is single-antenna only")
    {
        NetworkConfig cfg;
        cfg.n_rx = 2;
        CHECK_THROWS_AS(fd_advantage_condition(cfg), ConfigError);
        CHECK_FALSE(tg_min(cfg).condition_holds.has_value());
    }

    TEST_CASE("t_hd_max decreasing in density")
    {
        NetworkConfig cfg;
        double prev = 2;
        for (double l : {0.0, 1e-5, 1e-4, 1e-3, 1e-2})
        {
            cfg.lambda = l;
            double const t = t_hd_max(cfg);
            CHECK(t < prev);
            prev = t;
        }
    }

    TEST_CASE("gain strictly decreasing in self-interference")
    {
        NetworkConfig cfg;
        for (int n : {1, 4})
        {
            cfg.n_rx = cfg.n_tx = n;
            double prev = 3;
            for (double db = -120; db <= 0; db += 5)
            {
                cfg.omega = db_to_linear(db);
                double const tg = tg_min(cfg).tg_min;
                CHECK(tg < prev);
                prev = tg;
            }
        }
    }

    TEST_CASE("closed-form condition matches the gain on random configs")
    {
        std::mt19937_64 rng(41);
        std::uniform_real_distribution<double> u(0, 1);
        int agree = 0;
        for (int i = 0; i < 300; ++i)
        {
            NetworkConfig c;
            c.lambda = std::pow(10, -6 + 4 * u(rng));
            c.alpha = 2.2 + 4 * u(rng);
            c.r_bh = 1 + 20 * u(rng);
            c.r_ut = c.r_bh * (0.05 + 0.9 * u(rng));
            c.rho_fd = 0.05 + 2 * u(rng);
            c.rho_bh = 0.05 + 2 * u(rng);
            c.theta = db_to_linear(-10 + 30 * u(rng));
            c.k_factor = 10 * u(rng);
            c.omega = db_to_linear(-120 + 100 * u(rng));
            double const tg = tg_min(c).tg_min;
            if (std::abs(tg - 1) <= 1e-12)
                continue;
            bool const cond = fd_advantage_condition(c);
            CHECK(cond == (tg >= 1));
            agree += cond == (tg >= 1);
        }
        CHECK(agree > 250);
    }

    TEST_CASE("crossover brackets and straddles")
    {
        NetworkConfig const cfg;
        auto const x = omega_crossover(cfg);
        REQUIRE(x.status == CrossoverResult::Status::Found);
        CHECK(x.bracket_hi_db - x.bracket_lo_db <= 0.1);
        CHECK(x.omega_db == doctest::Approx(-26.16).epsilon(0.01));
        NetworkConfig lo = cfg, hi = cfg;
        lo.omega = db_to_linear(x.omega_db - 0.1);
        hi.omega = db_to_linear(x.omega_db + 0.1);
        CHECK(tg_min(lo).tg_min >= 1);
        CHECK(tg_min(hi).tg_min < 1);
        CHECK(std::abs(tg_min(lo).tg_min - 1) <= 0.02);
    }

    TEST_CASE("crossover is invariant to the bracket")
    {
        NetworkConfig const cfg;
        double const ref = omega_crossover(cfg).omega_db;
        for (auto [lo, hi] : {std::pair{-200.0, 0.0}, std::pair{-90.0, -5.0},
                              std::pair{-60.0, 20.0}})
        {
            auto const x = omega_crossover(cfg, {}, lo, hi);
            REQUIRE(x.status == CrossoverResult::Status::Found);
            CHECK(std::abs(x.omega_db - ref) <= 0.1);
        }
    }

    TEST_CASE("crossover increases with antennas")
    {
        NetworkConfig cfg;
        double prev = -1e9;
        for (int n : {1, 2, 4, 8})
        {
            cfg.n_rx = cfg.n_tx = n;
            auto const x = omega_crossover(cfg);
            REQUIRE(x.status == CrossoverResult::Status::Found);
            CHECK(x.omega_db > prev);
            prev = x.omega_db;
        }
    }

    TEST_CASE("no-crossing statuses")
    {
        NetworkConfig cfg;
        auto const above = omega_crossover(cfg, {}, -120, -60);
        CHECK(above.status == CrossoverResult::Status::AboveOneEverywhere);
        auto const below = omega_crossover(cfg, {}, -10, 0);
        CHECK(below.status == CrossoverResult::Status::BelowOneEverywhere);
        CHECK_THROWS_AS(omega_crossover(cfg, {}, 0, -10), ConfigError);
    }
}
