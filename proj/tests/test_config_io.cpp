#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>

#include "fdnet/config_io.hpp"

using namespace fdnet;

TEST_SUITE("config")
{
    TEST_CASE("empty text gives the defaults")
    {
        CHECK(parse_config("") == NetworkConfig{});
        CHECK(parse_config("# only a comment\n\n   \n") == NetworkConfig{});
    }

    TEST_CASE("keys and dB conversion")
    {
        auto const c = parse_config("lambda = 1e-4\n"
                                    "theta_db = 10   # ten dB\n"
                                    "omega_db=-60\n"
                                    "antennas = 4\n"
                                    "k_factor = 0\n");
        CHECK(c.lambda == 1e-4);
        CHECK(c.theta == doctest::Approx(10).epsilon(1e-14));
        CHECK(c.omega == doctest::Approx(1e-6).epsilon(1e-14));
        CHECK(c.n_rx == 4);
        CHECK(c.n_tx == 4);
        CHECK(c.k_factor == 0);
    }

    TEST_CASE("malformed input is rejected")
    {
        CHECK_THROWS_AS(parse_config("lambda 1e-3"), ConfigError);
        CHECK_THROWS_AS(parse_config("lambda = abc"), ConfigError);
        CHECK_THROWS_AS(parse_config("lambda ="), ConfigError);
        CHECK_THROWS_AS(parse_config("speed = 3"), ConfigError);
        CHECK_THROWS_AS(parse_config("alpha = 3\nalpha = 4"), ConfigError);
        CHECK_THROWS_AS(parse_config("theta = 1\ntheta_db = 0"), ConfigError);
        CHECK_THROWS_AS(parse_config("n_rx = 2.5"), ConfigError);
        CHECK_THROWS_AS(parse_config("antennas = 2\nn_rx = 2"), ConfigError);
        CHECK_THROWS_AS(parse_config("alpha = 2"), ConfigError);
    }

    TEST_CASE("format and parse round trip")
    {
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> u(0, 1);
        for (int i = 0; i < 200; ++i)
        {
            NetworkConfig c;
            c.lambda = u(rng) * 1e-2;
            c.alpha = 2 + 4 * u(rng) + 1e-9;
            c.r_bh = 1 + 10 * u(rng);
            c.r_ut = c.r_bh * u(rng) * 0.9 + 1e-3;
            c.theta = db_to_linear(30 * u(rng) - 10);
            c.omega = db_to_linear(-120 * u(rng));
            c.n_rx = 1 + i % 8;
            c.n_tx = 1 + i % 5;
            CHECK(parse_config(format_config(c)) == c);
        }
    }

    TEST_CASE("shortest round-trip doubles")
    {
        CHECK(format_double(0.1) == "0.1");
        CHECK(format_double(1e-300) == "1e-300");
        double const x = 0.1 + 0.2;
        CHECK(std::stod(format_double(x)) == x);
    }

    TEST_CASE("load from file")
    {
        auto const path = std::filesystem::temp_directory_path()
                          / "fdnet_config_test.cfg";
        {
            std::ofstream f(path);
            f << "lambda = 2e-4\n";
        }
        CHECK(load_config(path).lambda == 2e-4);
        std::filesystem::remove(path);
        CHECK_THROWS_AS(load_config(path), ConfigError);
    }
}
