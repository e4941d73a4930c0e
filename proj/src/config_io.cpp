#include "fdnet/config_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace fdnet {

namespace {

std::string_view trim(std::string_view s)
{
    auto const first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    auto const last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, std::string const& what)
{
    throw ConfigError("config line " + std::to_string(line) + ": " + what);
}

double parse_double(std::string_view v, int line, std::string_view key)
{
    double x = 0;
    auto const [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        fail(line, "'" + std::string(key) + "' expects a number, got '"
                       + std::string(v) + "'");
    return x;
}

int parse_int(std::string_view v, int line, std::string_view key)
{
    int x = 0;
    auto const [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        fail(line, "'" + std::string(key) + "' expects an integer, got '"
                       + std::string(v) + "'");
    return x;
}

}  // namespace

NetworkConfig parse_config(std::string_view text)
{
    NetworkConfig cfg;
    std::set<std::string> seen;
    int line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        auto const nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{}
                                            : text.substr(nl + 1);
        if (auto const hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string_view::npos)
            fail(line_no, "expected key = value");
        std::string const key(trim(line.substr(0, eq)));
        std::string_view const value = trim(line.substr(eq + 1));
        if (value.empty())
            fail(line_no, "missing value for '" + key + "'");

        // theta/theta_db and omega/omega_db name the same quantity.
        std::string canonical = key;
        if (key == "theta_db")
            canonical = "theta";
        else if (key == "omega_db")
            canonical = "omega";
        if (!seen.insert(canonical).second)
            fail(line_no, "'" + key + "' given more than once");

        if (key == "lambda")
            cfg.lambda = parse_double(value, line_no, key);
        else if (key == "alpha")
            cfg.alpha = parse_double(value, line_no, key);
        else if (key == "r_bh")
            cfg.r_bh = parse_double(value, line_no, key);
        else if (key == "r_ut")
            cfg.r_ut = parse_double(value, line_no, key);
        else if (key == "rho_fd")
            cfg.rho_fd = parse_double(value, line_no, key);
        else if (key == "rho_bh")
            cfg.rho_bh = parse_double(value, line_no, key);
        else if (key == "theta")
            cfg.theta = parse_double(value, line_no, key);
        else if (key == "theta_db")
            cfg.theta = db_to_linear(parse_double(value, line_no, key));
        else if (key == "n_rx")
            cfg.n_rx = parse_int(value, line_no, key);
        else if (key == "n_tx")
            cfg.n_tx = parse_int(value, line_no, key);
        else if (key == "antennas")
        {
            if (seen.contains("n_rx") || seen.contains("n_tx"))
                fail(line_no, "'antennas' conflicts with n_rx/n_tx");
            cfg.n_rx = cfg.n_tx = parse_int(value, line_no, key);
        }
        else if (key == "k_factor")
            cfg.k_factor = parse_double(value, line_no, key);
        else if (key == "omega")
            cfg.omega = parse_double(value, line_no, key);
        else if (key == "omega_db")
            cfg.omega = db_to_linear(parse_double(value, line_no, key));
        else if (key == "noise_power")
            cfg.noise_power = parse_double(value, line_no, key);
        else
            fail(line_no, "unknown key '" + key + "'");
        if ((key == "n_rx" || key == "n_tx") && seen.contains("antennas"))
            fail(line_no, "'" + key + "' conflicts with antennas");
    }
    return validate_config(cfg);
}

NetworkConfig load_config(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string format_double(double x)
{
    char buf[64];
    auto const [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::string format_config(NetworkConfig const& cfg)
{
    std::ostringstream os;
    os << "lambda = " << format_double(cfg.lambda) << '\n'
       << "alpha = " << format_double(cfg.alpha) << '\n'
       << "r_bh = " << format_double(cfg.r_bh) << '\n'
       << "r_ut = " << format_double(cfg.r_ut) << '\n'
       << "rho_fd = " << format_double(cfg.rho_fd) << '\n'
       << "rho_bh = " << format_double(cfg.rho_bh) << '\n'
       << "theta = " << format_double(cfg.theta) << '\n'
       << "n_rx = " << cfg.n_rx << '\n'
       << "n_tx = " << cfg.n_tx << '\n'
       << "k_factor = " << format_double(cfg.k_factor) << '\n'
       << "omega = " << format_double(cfg.omega) << '\n'
       << "noise_power = " << format_double(cfg.noise_power) << '\n';
    return os.str();
}

}  // namespace fdnet
