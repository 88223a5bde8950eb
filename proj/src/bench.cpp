#include "isac/bench.hpp"

#include <cmath>
#include <ostream>

#include "isac/channel.hpp"
#include "isac/crlb.hpp"
#include "isac/refsig.hpp"

namespace isac {

namespace {

constexpr const char* kVersion = "isac-sim 1.0";

/// Order-independent accumulation: per-trial squared errors land in
/// preallocated slots, then a Neumaier-compensated serial pass reduces
/// them, so thread count and scheduling never change the result.
double neumaier_sum(const std::vector<double>& v) {
    double sum = 0.0, comp = 0.0;
    for (double x : v) {
        double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

struct PointSetup {
    OfdmParams params;
    DmrsConfig cfg;
    TargetScenario target;
};

PointSetup apply_axis(const SweepSpec& spec, double value) {
    PointSetup p{spec.params, spec.cfg, spec.target};
    switch (spec.axis) {
    case SweepAxis::SnrDb:
        p.target.snr_db = value;
        break;
    case SweepAxis::DeltaF: {
        // Scale the CP with the symbol so the numerology stays proportional.
        double ratio = spec.params.delta_f / value;
        p.params = OfdmParams::make(value, spec.params.n_subcarriers,
                                    spec.params.m_symbols,
                                    spec.params.t_cp * ratio, spec.params.f_c);
        break;
    }
    case SweepAxis::TTotal: {
        double scale = value / spec.params.t_total;
        p.params = OfdmParams::make(spec.params.delta_f / scale,
                                    spec.params.n_subcarriers,
                                    spec.params.m_symbols,
                                    spec.params.t_cp * scale, spec.params.f_c);
        break;
    }
    case SweepAxis::NSubcarriers:
        p.params = OfdmParams::make(spec.params.delta_f,
                                    static_cast<int>(value),
                                    spec.params.m_symbols, spec.params.t_cp,
                                    spec.params.f_c);
        break;
    case SweepAxis::MSymbols:
        p.params = OfdmParams::make(spec.params.delta_f,
                                    spec.params.n_subcarriers,
                                    static_cast<int>(value), spec.params.t_cp,
                                    spec.params.f_c);
        p.cfg.symbol_positions =
            DmrsConfig::type_a_positions(static_cast<int>(value));
        break;
    }
    return p;
}

const char* axis_name(SweepAxis axis) {
    switch (axis) {
    case SweepAxis::SnrDb: return "snr_db";
    case SweepAxis::DeltaF: return "delta_f";
    case SweepAxis::TTotal: return "t_total";
    case SweepAxis::NSubcarriers: return "n_subcarriers";
    case SweepAxis::MSymbols: return "m_symbols";
    }
    return "?";
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point,
                          std::uint64_t trial) {
    std::uint64_t z = master ^ (point * 0x9e3779b97f4a7c15ULL) ^
                      (trial * 0xbf58476d1ce4e5b9ULL);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void SweepSpec::validate() const {
    if (trials < 1) throw ConfigError("sweep: trials must be >= 1");
    for (double v : values)
        if (!std::isfinite(v)) throw ConfigError("sweep: non-finite value");
    cfg.validate(params);
    target.validate();
}

std::vector<double> SweepSpec::effective_values() const {
    if (!values.empty()) return values;
    std::vector<double> out;
    for (int db = -15; db <= 10; ++db) out.push_back(static_cast<double>(db));
    return out;
}

SweepResult run_sweep(const SweepSpec& spec, ExecMode mode) {
    spec.validate();
    const auto values = spec.effective_values();
    if (values.empty()) throw ConfigError("sweep: no sweep values");

    SweepResult result;
    result.points.reserve(values.size());

    for (std::size_t pi = 0; pi < values.size(); ++pi) {
        const PointSetup setup = apply_axis(spec, values[pi]);

        const ResourceGrid tx =
            spec.signal == SignalKind::Dmrs
                ? build_dmrs_grid(setup.params, setup.cfg)
                : build_data_grid(setup.params, setup.cfg.seed);

        ChannelOpts ch;
        ch.add_noise = spec.noise;

        std::vector<double> err2_r(spec.trials), err2_v(spec.trials);
        std::vector<std::uint8_t> failed(spec.trials, 0);

        auto run_trial = [&](int t) {
            const std::uint64_t seed = derive_seed(spec.master_seed, pi,
                                                   static_cast<std::uint64_t>(t));
            ResourceGrid rx =
                apply_symbol_domain(tx, setup.params, setup.target, seed, ch);
            QuotientGrid q =
                spec.signal == SignalKind::Dmrs
                    ? extract_quotient(rx, tx, setup.params, setup.cfg)
                    : extract_quotient(rx, tx, setup.params);
            SensingEstimate est = estimate(q, spec.est);
            SensingBounds span = grid_spans(q, spec.est);
            const double er = est.range_m - setup.target.range_m;
            const double ev = est.velocity_mps - setup.target.velocity_mps;
            err2_r[t] = er * er;
            err2_v[t] = ev * ev;
            failed[t] = std::abs(er) > span.r_max / 4.0 ||
                        std::abs(ev) > span.v_max / 4.0;
        };

        if (mode == ExecMode::Parallel) {
            // First trial runs alone so all FFT plans exist before the
            // concurrent executions start.
            run_trial(0);
#pragma omp parallel for schedule(dynamic)
            for (int t = 1; t < spec.trials; ++t) run_trial(t);
        } else {
            for (int t = 0; t < spec.trials; ++t) run_trial(t);
        }

        int fails = 0;
        for (auto f : failed) fails += f;
        if (spec.exclude_failures) {
            for (int t = 0; t < spec.trials; ++t)
                if (failed[t]) { err2_r[t] = 0.0; err2_v[t] = 0.0; }
        }
        const int used = spec.exclude_failures ? spec.trials - fails
                                               : spec.trials;

        SweepPoint point;
        point.axis_value = values[pi];
        point.fail_fraction =
            static_cast<double>(fails) / static_cast<double>(spec.trials);
        point.trials_used = used;
        if (used > 0) {
            point.rmse_range_m = std::sqrt(neumaier_sum(err2_r) / used);
            point.rmse_velocity_mps = std::sqrt(neumaier_sum(err2_v) / used);
        }

        const double gamma =
            std::pow(10.0, setup.target.snr_db / 10.0);
        auto crlb = crlb_numeric_fisher(setup.params, setup.cfg, gamma,
                                        setup.target.attenuation);
        point.root_crlb_range_m = crlb.root_crlb_range_m;
        point.root_crlb_velocity_mps = crlb.root_crlb_velocity_mps;
        result.points.push_back(point);
    }
    return result;
}

std::pair<SweepResult, SweepResult> compare_signals(const SweepSpec& spec) {
    SweepSpec s = spec;
    s.signal = SignalKind::Dmrs;
    SweepResult dmrs = run_sweep(s);
    s.signal = SignalKind::Data;
    SweepResult data = run_sweep(s);
    return {std::move(dmrs), std::move(data)};
}

namespace {

void write_point(const SweepPoint& p, std::ostream& os) {
    os << p.axis_value << ',' << p.rmse_range_m << ',' << p.rmse_velocity_mps
       << ',' << p.root_crlb_range_m << ',' << p.root_crlb_velocity_mps << ','
       << p.fail_fraction << ',' << p.trials_used << '\n';
}

} // namespace

void write_sweep_csv(const SweepResult& result, std::ostream& os) {
    os << "axis_value,rmse_range_m,rmse_velocity_mps,root_crlb_range_m,"
          "root_crlb_velocity_mps,fail_fraction,trials\n";
    for (const auto& p : result.points) write_point(p, os);
}

void write_compare_csv(const SweepResult& dmrs, const SweepResult& data,
                       std::ostream& os) {
    os << "signal,axis_value,rmse_range_m,rmse_velocity_mps,root_crlb_range_m,"
          "root_crlb_velocity_mps,fail_fraction,trials\n";
    const std::size_t n = std::min(dmrs.points.size(), data.points.size());
    for (std::size_t i = 0; i < n; ++i) {
        os << "dmrs,";
        write_point(dmrs.points[i], os);
        os << "data,";
        write_point(data.points[i], os);
    }
}

void write_manifest(const SweepSpec& spec, std::ostream& os) {
    os << "version=" << kVersion << '\n'
       << "axis=" << axis_name(spec.axis) << '\n'
       << "trials=" << spec.trials << '\n'
       << "master_seed=" << spec.master_seed << '\n'
       << "signal=" << (spec.signal == SignalKind::Dmrs ? "dmrs" : "data")
       << '\n'
       << "noise=" << (spec.noise ? 1 : 0) << '\n'
       << "exclude_failures=" << (spec.exclude_failures ? 1 : 0) << '\n'
       << "delta_f=" << spec.params.delta_f << '\n'
       << "n_subcarriers=" << spec.params.n_subcarriers << '\n'
       << "m_symbols=" << spec.params.m_symbols << '\n'
       << "n_ifft=" << spec.params.n_ifft << '\n'
       << "t_symbol=" << spec.params.t_symbol << '\n'
       << "t_cp=" << spec.params.t_cp << '\n'
       << "t_cp_samples=" << spec.params.n_cp_samples() << '\n'
       << "t_cp_rounding_s="
       << spec.params.t_cp -
              spec.params.n_cp_samples() * spec.params.sample_interval
       << '\n'
       << "t_total=" << spec.params.t_total << '\n'
       << "f_c=" << spec.params.f_c << '\n'
       << "comb_carrier=" << spec.cfg.comb_carrier << '\n'
       << "comb_symbol=" << spec.cfg.comb_symbol << '\n'
       << "carrier_offset=" << spec.cfg.carrier_offset << '\n'
       << "sequence_seed=" << spec.cfg.seed << '\n'
       << "range_m=" << spec.target.range_m << '\n'
       << "velocity_mps=" << spec.target.velocity_mps << '\n'
       << "attenuation=" << spec.target.attenuation << '\n'
       << "snr_db=" << spec.target.snr_db << '\n'
       << "range_pad=" << spec.est.range_pad << '\n'
       << "doppler_pad=" << spec.est.doppler_pad << '\n'
       << "doppler_path="
       << (spec.est.doppler_path == DopplerPath::FullGrid ? "full" : "uniform")
       << '\n'
       << "combine="
       << (spec.est.combine == Combine::SinglePeak ? "single" : "sum") << '\n'
       << "signed_velocity=" << (spec.est.signed_velocity ? 1 : 0) << '\n';
    os << "symbol_positions=";
    for (std::size_t i = 0; i < spec.cfg.symbol_positions.size(); ++i)
        os << (i ? "," : "") << spec.cfg.symbol_positions[i];
    os << '\n';
}

} // namespace isac
