#include <doctest.h>

#include <random>

#include "fdnet/model.hpp"

using namespace fdnet;

TEST_SUITE("model")
{
    TEST_CASE("reference scenario is accepted unchanged")
    {
        NetworkConfig const cfg;
        CHECK(validate_config(cfg) == cfg);
        CHECK(cfg.alpha == 4.0);
        CHECK(cfg.r_bh == 5.0);
        CHECK(cfg.r_ut == 0.5);
    }

    TEST_CASE("boundary and ordering violations are rejected")
    {
        NetworkConfig cfg;
        cfg.alpha = 2.0;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);

        cfg = {};
        cfg.r_ut = 0.5;
        cfg.r_bh = 0.4;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);

        cfg = {};
        cfg.r_bh = cfg.r_ut;
        CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    }

    TEST_CASE("each invariant is enforced and named")
    {
        auto rejects = [](auto mutate, char const* name) {
            NetworkConfig cfg;
            mutate(cfg);
            try
            {
                validate_config(cfg);
                return false;
            }
            catch (ConfigError const& e)
            {
                return std::string(e.what()).find(name) != std::string::npos;
            }
        };
        CHECK(rejects([](NetworkConfig& c) { c.lambda = -1e-9; }, "lambda"));
        CHECK(rejects([](NetworkConfig& c) { c.rho_fd = 0; }, "rho_fd"));
        CHECK(rejects([](NetworkConfig& c) { c.rho_bh = -1; }, "rho_bh"));
        CHECK(rejects([](NetworkConfig& c) { c.theta = 0; }, "theta"));
        CHECK(rejects([](NetworkConfig& c) { c.omega = 0; }, "omega"));
        CHECK(rejects([](NetworkConfig& c) { c.k_factor = -0.1; }, "k_factor"));
        CHECK(rejects([](NetworkConfig& c) { c.n_rx = 0; }, "n_rx"));
        CHECK(rejects([](NetworkConfig& c) { c.n_tx = 0; }, "n_tx"));
        CHECK(rejects([](NetworkConfig& c) { c.noise_power = -1; },
                      "noise_power"));
        CHECK(rejects([](NetworkConfig& c) { c.alpha = std::nan(""); },
                      "alpha"));
        CHECK(rejects([](NetworkConfig& c) { c.r_ut = 0; }, "r_ut"));
    }

    TEST_CASE("first violation is reported")
    {
        NetworkConfig cfg;
        cfg.lambda = -1;
        cfg.alpha = 1;
        try
        {
            validate_config(cfg);
            FAIL("expected ConfigError");
        }
        catch (ConfigError const& e)
        {
            CHECK(std::string(e.what()).find("lambda") != std::string::npos);
        }
    }

    TEST_CASE("validation is idempotent")
    {
        NetworkConfig cfg;
        cfg.lambda = 3e-4;
        cfg.n_rx = 4;
        NetworkConfig const once = validate_config(cfg);
        CHECK(validate_config(once) == once);
        CHECK(once == cfg);
    }

    TEST_CASE("dB conversions")
    {
        CHECK(db_to_linear(-80) == doctest::Approx(1e-8).epsilon(1e-14));
        CHECK(db_to_linear(0) == 1.0);
        CHECK(linear_to_db(1e-8) == doctest::Approx(-80).epsilon(1e-14));
        CHECK_THROWS_AS(linear_to_db(0), ConfigError);
        CHECK_THROWS_AS(linear_to_db(-1), ConfigError);
    }

    TEST_CASE("dB round trip over [-200, 200]")
    {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> u(-200, 200);
        for (int i = 0; i < 10000; ++i)
        {
            double const x = u(rng);
            CHECK(std::abs(linear_to_db(db_to_linear(x)) - x)
                  <= 1e-12 * std::max(1.0, std::abs(x)));
        }
    }

    TEST_CASE("Laplace abscissas of the reference scenario")
    {
        NetworkConfig const cfg;
        CHECK(first_hop_abscissa(cfg) == doctest::Approx(625).epsilon(1e-15));
        CHECK(second_hop_abscissa(cfg) == doctest::Approx(0.125).epsilon(1e-15));
    }

    TEST_CASE("evaluation mode names")
    {
        for (auto m : {EvalMode::Exact, EvalMode::LowerBound,
                       EvalMode::UpperBound})
            CHECK(eval_mode_from_string(to_string(m)) == m);
        CHECK(eval_mode_from_string("LowerBound") == EvalMode::LowerBound);
        CHECK_THROWS_AS(eval_mode_from_string("middle"), ConfigError);
    }
}
