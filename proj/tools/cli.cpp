#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fdnet/config_io.hpp"
#include "fdnet/montecarlo.hpp"
#include "fdnet/selfinterference.hpp"
#include "fdnet/success.hpp"
#include "fdnet/throughput.hpp"

namespace fdnet::cli {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    while (true)
    {
        auto const pos = s.find(sep);
        parts.push_back(s.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        s = s.substr(pos + 1);
    }
    return parts;
}

double to_double(std::string_view s, char const* what)
{
    double x = 0;
    auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError(std::string(what) + ": '" + std::string(s)
                          + "' is not a number");
    return x;
}

std::vector<int> parse_antenna_list(std::string_view text)
{
    std::vector<int> out;
    for (auto part : split(text, ','))
    {
        double const v = to_double(part, "--antennas");
        if (v < 1 || v != std::floor(v))
            throw ConfigError("--antennas expects positive integers");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

json config_json(NetworkConfig const& c)
{
    return {{"lambda", c.lambda},     {"alpha", c.alpha},
            {"r_bh", c.r_bh},         {"r_ut", c.r_ut},
            {"rho_fd", c.rho_fd},     {"rho_bh", c.rho_bh},
            {"theta", c.theta},       {"n_rx", c.n_rx},
            {"n_tx", c.n_tx},         {"k_factor", c.k_factor},
            {"omega", c.omega},       {"noise_power", c.noise_power}};
}

json estimate_json(MCEstimate const& e)
{
    return {{"mean", e.mean}, {"half_width_95", e.half_width_95}};
}

EvalMode eval_mode(RowMode m)
{
    switch (m)
    {
        case RowMode::Exact:
            return EvalMode::Exact;
        case RowMode::LowerBound:
            return EvalMode::LowerBound;
        case RowMode::UpperBound:
            return EvalMode::UpperBound;
        case RowMode::MonteCarlo:
            break;
    }
    throw ConfigError("Monte Carlo is not an analytic mode");
}

// Shared options of every subcommand.
struct Common
{
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--config", c.config_path, "key = value config file");
    sub->add_option("--out", c.out_path, "output file (default stdout)");
    sub->add_option("--seed", c.seed, "random seed");
}

NetworkConfig load(Common const& c)
{
    if (c.config_path.empty())
        return validate_config(NetworkConfig{});
    return load_config(c.config_path);
}

// Opens --out, or returns the fallback stream.
class Output
{
  public:
    Output(std::string const& path, std::ostream& fallback)
    {
        if (path.empty())
        {
            stream_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_)
            throw ConfigError("cannot open output file '" + path + "'");
        stream_ = file_.get();
    }
    std::ostream& get() { return *stream_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

int cmd_analyze(Common const& common, std::string const& modes_text,
                std::uint64_t trials, bool noise, std::ostream& out)
{
    NetworkConfig const cfg = load(common);
    auto const modes = parse_modes(modes_text);
    GammaSI const si = si_gamma_params(ricean_params(cfg.k_factor, cfg.omega),
                                       cfg.n_rx, cfg.n_tx);
    json doc;
    doc["config"] = config_json(cfg);
    doc["gamma_si"]
        = {{"a", si.a}, {"b", si.b}, {"gamma_corr", si.gamma_corr}};
    doc["s1"] = first_hop_abscissa(cfg);
    doc["s2"] = second_hop_abscissa(cfg);
    json results = json::object();
    for (RowMode m : modes)
    {
        if (m == RowMode::MonteCarlo)
        {
            SimulationSettings sim;
            sim.include_noise = noise;
            JointEstimate const j = estimate_joint(cfg, trials, common.seed, sim);
            results["montecarlo"] = {{"p1", estimate_json(j.hop1)},
                                     {"p2", estimate_json(j.hop2)},
                                     {"p_joint", estimate_json(j.joint)},
                                     {"trials", trials},
                                     {"seed", common.seed}};
            continue;
        }
        SuccessResult const r = p_suc_joint(cfg, eval_mode(m));
        results[std::string(to_string(m))]
            = {{"p1", r.p1}, {"p2", r.p2}, {"p_joint", r.p_joint}};
    }
    doc["success"] = results;
    ThroughputReport const tr = tg_min(cfg);
    doc["throughput"] = {{"t_fd_min", tr.t_fd_min},
                         {"t_hd_max", tr.t_hd_max},
                         {"tg_min", tr.tg_min},
                         {"condition_holds", tr.condition_holds
                                                 ? json(*tr.condition_holds)
                                                 : json(nullptr)}};
    Output o(common.out_path, out);
    o.get() << doc.dump(2) << '\n';
    return kExitOk;
}

std::string csv_escape(std::string const& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
    {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

int cmd_sweep(Common const& common, std::string const& sweep_text,
              std::string const& modes_text, std::uint64_t trials, bool noise,
              std::ostream& out)
{
    NetworkConfig const base = load(common);
    SweepSpec const spec = parse_sweep(sweep_text);
    auto const modes = parse_modes(modes_text);

    std::ostringstream csv;
    csv << "value,mode,p1,p2,p_joint,tg_min,ci_half_width,seed,error\n";
    for (double value : spec.values)
    {
        std::optional<NetworkConfig> cfg;
        std::string cfg_error;
        std::string tg;
        try
        {
            cfg = apply_sweep_value(base, spec.variable, value);
            tg = format_double(tg_min(*cfg).tg_min);
        }
        catch (std::exception const& e)
        {
            if (!cfg)
                cfg_error = e.what();
        }
        for (RowMode m : modes)
        {
            csv << format_double(value) << ',' << to_string(m) << ',';
            std::string err = cfg_error;
            std::ostringstream row;
            if (err.empty())
            {
                try
                {
                    if (m == RowMode::MonteCarlo)
                    {
                        SimulationSettings sim;
                        sim.include_noise = noise;
                        JointEstimate const j
                            = estimate_joint(*cfg, trials, common.seed, sim);
                        row << format_double(j.hop1.mean) << ','
                            << format_double(j.hop2.mean) << ','
                            << format_double(j.joint.mean) << ',' << tg << ','
                            << format_double(j.joint.half_width_95) << ','
                            << common.seed << ',';
                    }
                    else
                    {
                        SuccessResult const r = p_suc_joint(*cfg, eval_mode(m));
                        row << format_double(r.p1) << ','
                            << format_double(r.p2) << ','
                            << format_double(r.p_joint) << ',' << tg << ",,,";
                    }
                }
                catch (std::exception const& e)
                {
                    err = e.what();
                }
            }
            if (err.empty())
                csv << row.str() << '\n';
            else
                csv << ",,,,,," << csv_escape(err) << '\n';
        }
    }
    Output o(common.out_path, out);
    o.get() << csv.str();
    return kExitOk;
}

int cmd_validate_si(Common const& common, long long samples, std::ostream& out)
{
    if (samples < 1)
        throw ConfigError("--samples must be >= 1");
    NetworkConfig const cfg = load(common);
    RiceanParams const rp = ricean_params(cfg.k_factor, cfg.omega);
    GammaSI const si = si_gamma_params(rp, cfg.n_rx, cfg.n_tx);
    SIMoments const th = si_theoretical_moments(rp, cfg.n_rx, cfg.n_tx);
    auto const x = si_power_samples(cfg, static_cast<std::size_t>(samples),
                                    common.seed);
    double mean = 0;
    for (double v : x)
        mean += v;
    mean /= static_cast<double>(x.size());
    double var = 0;
    for (double v : x)
        var += (v - mean) * (v - mean);
    var /= x.size() > 1 ? static_cast<double>(x.size() - 1) : 1.0;

    json doc;
    doc["config"] = config_json(cfg);
    doc["gamma_si"]
        = {{"a", si.a}, {"b", si.b}, {"gamma_corr", si.gamma_corr}};
    doc["theoretical"] = {{"mean", th.mean},
                          {"second_moment", th.second_moment},
                          {"variance", th.variance}};
    doc["empirical"] = {{"mean", mean}, {"variance", var}};
    doc["ks_statistic"] = ks_statistic_gamma(x, si.a, si.b);
    doc["samples"] = samples;
    doc["seed"] = common.seed;
    Output o(common.out_path, out);
    o.get() << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_crossover(Common const& common, std::string const& antennas_text,
                  std::string const& bracket_text, std::ostream& out)
{
    NetworkConfig const base = load(common);
    auto const antennas = parse_antenna_list(antennas_text);
    auto const b = split(bracket_text, ':');
    if (b.size() != 2)
        throw ConfigError("--bracket expects LO_DB:HI_DB");
    double const lo = to_double(b[0], "--bracket");
    double const hi = to_double(b[1], "--bracket");

    std::ostringstream csv;
    csv << "antennas,omega_star_db,status,tg_at_star,tg_below,tg_above\n";
    for (int n : antennas)
    {
        NetworkConfig cfg = base;
        cfg.n_rx = cfg.n_tx = n;
        CrossoverResult const r = omega_crossover(cfg, {}, lo, hi);
        csv << n << ',';
        if (r.status != CrossoverResult::Status::Found)
        {
            csv << "no-crossing,"
                << (r.status == CrossoverResult::Status::AboveOneEverywhere
                        ? "above"
                        : "below")
                << ",,,\n";
            continue;
        }
        auto tg_at = [&](double db) {
            NetworkConfig c = cfg;
            c.omega = db_to_linear(db);
            return tg_min(c).tg_min;
        };
        csv << format_double(r.omega_db) << ",found,"
            << format_double(tg_at(r.omega_db)) << ','
            << format_double(tg_at(r.omega_db - 0.1)) << ','
            << format_double(tg_at(r.omega_db + 0.1)) << '\n';
    }
    Output o(common.out_path, out);
    o.get() << csv.str();
    return kExitOk;
}

}  // namespace

std::string_view to_string(SweepVariable v)
{
    switch (v)
    {
        case SweepVariable::Lambda:
            return "lambda";
        case SweepVariable::OmegaDb:
            return "omega_db";
        case SweepVariable::ThetaDb:
            return "theta_db";
        case SweepVariable::Antennas:
            return "antennas";
    }
    return "unknown";
}

std::string_view to_string(RowMode m)
{
    switch (m)
    {
        case RowMode::Exact:
            return "exact";
        case RowMode::LowerBound:
            return "lower";
        case RowMode::UpperBound:
            return "upper";
        case RowMode::MonteCarlo:
            return "montecarlo";
    }
    return "unknown";
}

SweepSpec parse_sweep(std::string_view text)
{
    auto const parts = split(text, ':');
    SweepSpec spec;
    std::string_view const var = parts[0];
    if (var == "lambda")
        spec.variable = SweepVariable::Lambda;
    else if (var == "omega_db")
        spec.variable = SweepVariable::OmegaDb;
    else if (var == "theta_db")
        spec.variable = SweepVariable::ThetaDb;
    else if (var == "antennas")
        spec.variable = SweepVariable::Antennas;
    else
        throw ConfigError("unknown sweep variable '" + std::string(var) + "'");

    if (parts.size() == 2)
    {
        for (auto v : split(parts[1], ','))
            spec.values.push_back(to_double(v, "--sweep"));
    }
    else if (parts.size() == 5)
    {
        double const start = to_double(parts[1], "--sweep start");
        double const stop = to_double(parts[2], "--sweep stop");
        double const count_d = to_double(parts[3], "--sweep count");
        if (count_d < 1 || count_d != std::floor(count_d))
            throw ConfigError("--sweep count must be a positive integer");
        auto const count = static_cast<int>(count_d);
        std::string_view const spacing = parts[4];
        bool const log_spacing = spacing == "log";
        if (!log_spacing && spacing != "linear")
            throw ConfigError("--sweep spacing must be linear or log");
        if (log_spacing && !(start > 0 && stop > 0))
            throw ConfigError("log spacing needs positive start and stop");
        for (int i = 0; i < count; ++i)
        {
            double const t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
            spec.values.push_back(
                log_spacing ? std::exp(std::log(start)
                                       + t * (std::log(stop) - std::log(start)))
                            : start + t * (stop - start));
        }
        // Pin the end points exactly.
        spec.values.front() = start;
        if (count > 1)
            spec.values.back() = stop;
    }
    else
    {
        throw ConfigError("--sweep expects VAR:START:STOP:COUNT:SPACING or "
                          "VAR:V1,V2,...");
    }
    if (spec.values.empty())
        throw ConfigError("--sweep produced no values");
    if (spec.variable == SweepVariable::Antennas)
    {
        for (double& v : spec.values)
        {
            v = std::round(v);
            if (v < 1)
                throw ConfigError("antenna counts must be >= 1");
        }
    }
    return spec;
}

std::vector<RowMode> parse_modes(std::string_view text)
{
    std::vector<RowMode> modes;
    for (auto name : split(text, ','))
    {
        if (name == "exact" || name == "Exact")
            modes.push_back(RowMode::Exact);
        else if (name == "lower" || name == "LowerBound")
            modes.push_back(RowMode::LowerBound);
        else if (name == "upper" || name == "UpperBound")
            modes.push_back(RowMode::UpperBound);
        else if (name == "montecarlo" || name == "MonteCarlo" || name == "mc")
            modes.push_back(RowMode::MonteCarlo);
        else
            throw ConfigError("unknown mode '" + std::string(name) + "'");
    }
    return modes;
}

NetworkConfig apply_sweep_value(NetworkConfig cfg, SweepVariable v,
                                double value)
{
    switch (v)
    {
        case SweepVariable::Lambda:
            cfg.lambda = value;
            break;
        case SweepVariable::OmegaDb:
            cfg.omega = db_to_linear(value);
            break;
        case SweepVariable::ThetaDb:
            cfg.theta = db_to_linear(value);
            break;
        case SweepVariable::Antennas:
            cfg.n_rx = cfg.n_tx = static_cast<int>(std::lround(value));
            break;
    }
    return validate_config(cfg);
}

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err)
{
    CLI::App app{"Success probability and throughput of two-hop full-duplex "
                 "relay networks",
                 "fdnet"};
    app.require_subcommand(1);

    Common common;
    std::string modes = "exact,lower,upper";
    std::uint64_t trials = 100000;
    bool noise = false;
    std::string sweep;
    long long samples = 100000;
    std::string antennas = "1,2,4,8";
    std::string bracket = "-120:0";

    auto* analyze = app.add_subcommand("analyze", "single-point JSON report");
    add_common(analyze, common);
    analyze->add_option("--modes", modes, "exact,lower,upper,montecarlo");
    analyze->add_option("--trials", trials, "Monte Carlo trials per hop");
    analyze->add_flag("--noise", noise, "add noise_power in the simulator");

    auto* sw = app.add_subcommand("sweep", "CSV sweep over one variable");
    add_common(sw, common);
    sw->add_option("--sweep", sweep, "VAR:START:STOP:COUNT:SPACING")
        ->required();
    sw->add_option("--modes", modes, "exact,lower,upper,montecarlo");
    sw->add_option("--trials", trials, "Monte Carlo trials per hop");
    sw->add_flag("--noise", noise, "add noise_power in the simulator");

    auto* vsi = app.add_subcommand("validate-si",
                                   "self-interference Gamma fit report");
    add_common(vsi, common);
    vsi->add_option("--samples", samples, "number of samples");

    auto* xo = app.add_subcommand("crossover",
                                  "self-interference attenuation at which "
                                  "the minimum throughput gain reaches 1");
    add_common(xo, common);
    xo->add_option("--antennas", antennas, "comma-separated N = n_rx = n_tx");
    xo->add_option("--bracket", bracket, "search bracket LO_DB:HI_DB");

    std::vector<char const*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("fdnet");
    for (auto const& a : args)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::CallForHelp const& e)
    {
        return app.exit(e, out, err);
    }
    catch (CLI::CallForAllHelp const& e)
    {
        return app.exit(e, out, err);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try
    {
        if (analyze->parsed())
            return cmd_analyze(common, modes, trials, noise, out);
        if (sw->parsed())
            return cmd_sweep(common, sweep, modes, trials, noise, out);
        if (vsi->parsed())
            return cmd_validate_si(common, samples, out);
        if (xo->parsed())
            return cmd_crossover(common, antennas, bracket, out);
    }
    catch (ConfigError const& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (NumericError const& e)
    {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitConfig;
}

}  // namespace fdnet::cli
