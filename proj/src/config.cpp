#include "isac/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace isac {

namespace {

const std::set<std::string> kKnownKeys = {
    "delta_f",        "n_subcarriers", "m_symbols",     "t_cp",
    "f_c",            "n_ifft",        "comb_carrier",  "comb_symbol",
    "carrier_offset", "symbol_positions", "seed",
    "range_m",        "velocity_mps",  "attenuation",   "snr_db",
    "trials",         "master_seed",   "signal",        "sweep_axis",
    "sweep_values",   "noise",         "exclude_failures",
    "range_pad",      "doppler_pad",   "doppler_path",  "combine",
    "signed_velocity",
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double d;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not a number: " + v);
    }
    if (pos != v.size())
        throw ConfigError("config key '" + key + "': trailing characters: " + v);
    return d;
}

long to_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long n;
    try {
        n = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': not an integer: " + v);
    }
    if (pos != v.size())
        throw ConfigError("config key '" + key + "': trailing characters: " + v);
    return n;
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "1" || v == "true" || v == "on") return true;
    if (v == "0" || v == "false" || v == "off") return false;
    throw ConfigError("config key '" + key + "': not a boolean: " + v);
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_double(key, item));
    }
    return out;
}

} // namespace

RunConfig RunConfig::parse(std::istream& is) {
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.count(key))
            throw ConfigError("config: unknown key '" + key + "'");
        cfg.entries[key] = value;
    }
    return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open file " + path);
    return parse(in);
}

SweepSpec RunConfig::to_spec() const {
    auto get = [&](const std::string& key) { return entries.at(key); };

    OfdmParams base = OfdmParams::table_defaults();
    double delta_f = has("delta_f") ? to_double("delta_f", get("delta_f"))
                                    : base.delta_f;
    int n = has("n_subcarriers")
                ? static_cast<int>(to_int("n_subcarriers", get("n_subcarriers")))
                : base.n_subcarriers;
    int m = has("m_symbols")
                ? static_cast<int>(to_int("m_symbols", get("m_symbols")))
                : base.m_symbols;
    double t_cp = has("t_cp") ? to_double("t_cp", get("t_cp")) : base.t_cp;
    double f_c = has("f_c") ? to_double("f_c", get("f_c")) : base.f_c;
    int n_ifft = has("n_ifft")
                     ? static_cast<int>(to_int("n_ifft", get("n_ifft")))
                     : 0;

    SweepSpec spec;
    spec.params = OfdmParams::make(delta_f, n, m, t_cp, f_c, n_ifft);

    spec.cfg = DmrsConfig::table_defaults(m);
    if (has("comb_carrier"))
        spec.cfg.comb_carrier =
            static_cast<int>(to_int("comb_carrier", get("comb_carrier")));
    if (has("comb_symbol"))
        spec.cfg.comb_symbol =
            static_cast<int>(to_int("comb_symbol", get("comb_symbol")));
    if (has("carrier_offset"))
        spec.cfg.carrier_offset =
            static_cast<int>(to_int("carrier_offset", get("carrier_offset")));
    if (has("seed"))
        spec.cfg.seed = static_cast<std::uint64_t>(to_int("seed", get("seed")));
    if (has("symbol_positions")) {
        spec.cfg.symbol_positions.clear();
        for (double v : to_list("symbol_positions", get("symbol_positions")))
            spec.cfg.symbol_positions.push_back(static_cast<int>(v));
    }
    spec.cfg.validate(spec.params);

    if (has("range_m"))
        spec.target.range_m = to_double("range_m", get("range_m"));
    if (has("velocity_mps"))
        spec.target.velocity_mps = to_double("velocity_mps", get("velocity_mps"));
    if (has("attenuation"))
        spec.target.attenuation = to_double("attenuation", get("attenuation"));
    if (has("snr_db")) spec.target.snr_db = to_double("snr_db", get("snr_db"));
    spec.target.validate();

    if (has("trials"))
        spec.trials = static_cast<int>(to_int("trials", get("trials")));
    if (has("master_seed"))
        spec.master_seed =
            static_cast<std::uint64_t>(to_int("master_seed", get("master_seed")));
    if (has("noise")) spec.noise = to_bool("noise", get("noise"));
    if (has("exclude_failures"))
        spec.exclude_failures =
            to_bool("exclude_failures", get("exclude_failures"));
    if (has("signal")) {
        const auto& v = get("signal");
        if (v == "dmrs") spec.signal = SignalKind::Dmrs;
        else if (v == "data") spec.signal = SignalKind::Data;
        else throw ConfigError("config key 'signal': expected dmrs|data");
    }
    if (has("sweep_axis")) {
        const auto& v = get("sweep_axis");
        if (v == "snr_db") spec.axis = SweepAxis::SnrDb;
        else if (v == "delta_f") spec.axis = SweepAxis::DeltaF;
        else if (v == "t_total") spec.axis = SweepAxis::TTotal;
        else if (v == "n_subcarriers") spec.axis = SweepAxis::NSubcarriers;
        else if (v == "m_symbols") spec.axis = SweepAxis::MSymbols;
        else throw ConfigError("config key 'sweep_axis': unknown axis " + v);
    }
    if (has("sweep_values"))
        spec.values = to_list("sweep_values", get("sweep_values"));

    if (has("range_pad"))
        spec.est.range_pad =
            static_cast<int>(to_int("range_pad", get("range_pad")));
    if (has("doppler_pad"))
        spec.est.doppler_pad =
            static_cast<int>(to_int("doppler_pad", get("doppler_pad")));
    if (has("doppler_path")) {
        const auto& v = get("doppler_path");
        if (v == "full") spec.est.doppler_path = DopplerPath::FullGrid;
        else if (v == "uniform") spec.est.doppler_path = DopplerPath::UniformComb;
        else throw ConfigError("config key 'doppler_path': expected full|uniform");
    }
    if (has("combine")) {
        const auto& v = get("combine");
        if (v == "single") spec.est.combine = Combine::SinglePeak;
        else if (v == "sum") spec.est.combine = Combine::MagnitudeSum;
        else throw ConfigError("config key 'combine': expected single|sum");
    }
    if (has("signed_velocity"))
        spec.est.signed_velocity =
            to_bool("signed_velocity", get("signed_velocity"));
    if (spec.est.range_pad < 1 || spec.est.doppler_pad < 1)
        throw ConfigError("config: padding factors must be >= 1");
    return spec;
}

} // namespace isac
