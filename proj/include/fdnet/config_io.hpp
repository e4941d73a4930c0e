#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fdnet/model.hpp"

namespace fdnet {

/// Parses flat "key = value" text. Blank lines and '#' comments are
/// ignored. Keys: lambda, alpha, r_bh, r_ut, rho_fd, rho_bh, theta or
/// theta_db, n_rx, n_tx, antennas (sets both counts), k_factor, omega or
/// omega_db, noise_power. Unset keys keep the NetworkConfig defaults.
/// Throws ConfigError on unknown or repeated keys, malformed numbers and
/// invalid configurations.
NetworkConfig parse_config(std::string_view text);

/// Reads and parses a file; throws ConfigError if it cannot be read.
NetworkConfig load_config(std::filesystem::path const& path);

/// Writes cfg in the format accepted by parse_config (linear units, full
/// round-trip precision).
std::string format_config(NetworkConfig const& cfg);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double x);

}  // namespace fdnet
