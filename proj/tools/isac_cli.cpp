// Command-line front end: grid | simulate | bounds | crlb | sweep.
// Exit codes: 0 ok, 2 usage, 3 validation, 4 runtime.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "isac/bench.hpp"
#include "isac/channel.hpp"
#include "isac/config.hpp"
#include "isac/crlb.hpp"
#include "isac/refsig.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int trials = 0;
    std::string signal;
    bool no_noise = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "key=value config file");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--seed", flags.seed, "override master seed")
        ->each([&](const std::string&) { flags.seed_set = true; });
    cmd->add_option("--trials", flags.trials, "trials per sweep point");
    cmd->add_option("--signal", flags.signal, "dmrs | data")
        ->check(CLI::IsMember({"dmrs", "data"}));
    cmd->add_flag("--no-noise", flags.no_noise, "disable channel noise");
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

isac::SweepSpec load_spec(const CommonFlags& flags) {
    isac::RunConfig cfg;
    if (!flags.config_path.empty()) {
        if (!fs::exists(flags.config_path))
            throw UsageError("config file not found: " + flags.config_path);
        cfg = isac::RunConfig::parse_file(flags.config_path);
    }
    isac::SweepSpec spec = cfg.to_spec();
    if (flags.seed_set) spec.master_seed = flags.seed;
    if (flags.trials > 0) spec.trials = flags.trials;
    if (flags.signal == "dmrs") spec.signal = isac::SignalKind::Dmrs;
    if (flags.signal == "data") spec.signal = isac::SignalKind::Data;
    if (flags.no_noise) spec.noise = false;
    return spec;
}

std::ofstream open_out(const CommonFlags& flags, const std::string& name) {
    fs::create_directories(flags.out_dir);
    fs::path p = fs::path(flags.out_dir) / name;
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot open output file " + p.string());
    std::cerr << "wrote " << p.string() << '\n';
    return os;
}

int cmd_grid(const CommonFlags& flags) {
    auto spec = load_spec(flags);
    isac::ResourceGrid grid =
        spec.signal == isac::SignalKind::Dmrs
            ? isac::build_dmrs_grid(spec.params, spec.cfg)
            : isac::build_data_grid(spec.params, spec.cfg.seed);
    auto os = open_out(flags, "grid.csv");
    isac::write_grid_csv(grid, os);
    return 0;
}

int cmd_simulate(const CommonFlags& flags) {
    auto spec = load_spec(flags);
    isac::ResourceGrid tx =
        spec.signal == isac::SignalKind::Dmrs
            ? isac::build_dmrs_grid(spec.params, spec.cfg)
            : isac::build_data_grid(spec.params, spec.cfg.seed);
    isac::ChannelOpts ch;
    ch.add_noise = spec.noise;
    auto rx = isac::apply_symbol_domain(
        tx, spec.params, spec.target,
        isac::derive_seed(spec.master_seed, 0, 0), ch);
    auto q = spec.signal == isac::SignalKind::Dmrs
                 ? isac::extract_quotient(rx, tx, spec.params, spec.cfg)
                 : isac::extract_quotient(rx, tx, spec.params);
    auto est = isac::estimate(q, spec.est);

    json record = {
        {"true_range", spec.target.range_m},
        {"est_range", est.range_m},
        {"range_index", est.range_index},
        {"true_velocity", spec.target.velocity_mps},
        {"est_velocity", est.velocity_mps},
        {"velocity_index", est.velocity_index},
        {"snr_db", spec.target.snr_db},
        {"seed", spec.master_seed},
    };
    std::cout << record.dump(2) << '\n';
    {
        auto os = open_out(flags, "estimate.json");
        os << record.dump(2) << '\n';
    }
    {
        auto os = open_out(flags, "range_profile.csv");
        os << "bin,magnitude\n";
        for (std::size_t i = 0; i < est.range_profile.size(); ++i)
            os << i << ',' << est.range_profile[i] << '\n';
    }
    {
        auto os = open_out(flags, "doppler_profile.csv");
        os << "bin,magnitude\n";
        for (std::size_t i = 0; i < est.doppler_profile.size(); ++i)
            os << i << ',' << est.doppler_profile[i] << '\n';
    }
    return 0;
}

int cmd_bounds(const CommonFlags& flags) {
    auto spec = load_spec(flags);
    auto b = isac::bounds(spec.params, spec.cfg);
    json record = {
        {"r_max_m", b.r_max},
        {"delta_r_m", b.delta_r},
        {"v_max_mps", b.v_max},
        {"delta_v_mps", b.delta_v},
    };
    std::cout << record.dump(2) << '\n';
    return 0;
}

int cmd_crlb(const CommonFlags& flags) {
    auto spec = load_spec(flags);
    auto values = spec.effective_values();
    auto os = open_out(flags, "crlb.csv");
    os << "snr_db,root_crlb_range_m,root_crlb_velocity_mps,method\n";
    for (double snr : values) {
        const double gamma = std::pow(10.0, snr / 10.0);
        auto inputs = isac::CrlbInputs::from(spec.params, spec.cfg, gamma,
                                             spec.target.attenuation);
        auto cf = isac::crlb_closed_form(inputs);
        os << snr << ',' << cf.root_crlb_range_m << ','
           << cf.root_crlb_velocity_mps << ",closed_form\n";
        auto nf = isac::crlb_numeric_fisher(spec.params, spec.cfg, gamma,
                                            spec.target.attenuation);
        os << snr << ',' << nf.root_crlb_range_m << ','
           << nf.root_crlb_velocity_mps << ",numeric_fisher\n";
    }
    return 0;
}

int cmd_sweep(const CommonFlags& flags) {
    auto spec = load_spec(flags);
    auto result = isac::run_sweep(spec);
    {
        auto os = open_out(flags, "sweep.csv");
        isac::write_sweep_csv(result, os);
    }
    {
        auto os = open_out(flags, "sweep_manifest.txt");
        isac::write_manifest(spec, os);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DMRS-based OFDM sensing simulator"};
    app.require_subcommand(1);

    CommonFlags flags;
    auto* grid = app.add_subcommand("grid", "dump the resource grid as CSV");
    auto* simulate =
        app.add_subcommand("simulate", "one end-to-end estimation trial");
    auto* bounds_cmd =
        app.add_subcommand("bounds", "resolution and unambiguous window");
    auto* crlb = app.add_subcommand("crlb", "CRLB curves over the SNR range");
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo RMSE sweep");
    for (auto* cmd : {grid, simulate, bounds_cmd, crlb, sweep})
        add_common(cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (grid->parsed()) return cmd_grid(flags);
        if (simulate->parsed()) return cmd_simulate(flags);
        if (bounds_cmd->parsed()) return cmd_bounds(flags);
        if (crlb->parsed()) return cmd_crlb(flags);
        if (sweep->parsed()) return cmd_sweep(flags);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const isac::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const isac::ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}
