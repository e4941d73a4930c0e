#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fdnet/model.hpp"

namespace fdnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

enum class SweepVariable
{
    Lambda,
    OmegaDb,
    ThetaDb,
    Antennas,
};

enum class RowMode
{
    Exact,
    LowerBound,
    UpperBound,
    MonteCarlo,
};

struct SweepSpec
{
    SweepVariable variable = SweepVariable::Lambda;
    std::vector<double> values;
};

/// "VAR:START:STOP:COUNT:SPACING" (SPACING is linear or log) or
/// "VAR:V1,V2,...". Antenna values are rounded to integers.
SweepSpec parse_sweep(std::string_view text);

/// Comma-separated list of exact, lower, upper, montecarlo (long names
/// Exact, LowerBound, UpperBound, MonteCarlo are accepted too).
std::vector<RowMode> parse_modes(std::string_view text);

std::string_view to_string(SweepVariable v);
std::string_view to_string(RowMode m);

/// Applies one sweep value to a configuration (dB values are converted).
NetworkConfig apply_sweep_value(NetworkConfig cfg, SweepVariable v,
                                double value);

/// Runs the command line; returns the process exit code. Normal output goes
/// to out (or the --out file), diagnostics to err.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace fdnet::cli
