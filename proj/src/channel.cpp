#include "isac/channel.hpp"

#include <numbers>
#include <random>

namespace isac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cd complex_gaussian(std::mt19937_64& rng, std::normal_distribution<double>& n) {
    double re = n(rng);
    double im = n(rng);
    return {re, im};
}

} // namespace

ResourceGrid apply_symbol_domain(const ResourceGrid& grid,
                                 const OfdmParams& params,
                                 const TargetScenario& target,
                                 std::uint64_t noise_seed,
                                 const ChannelOpts& opts) {
    if (grid.n_subcarriers != params.n_subcarriers ||
        grid.m_symbols != params.m_symbols)
        throw ShapeError("apply_symbol_domain: grid does not match params");
    target.validate();

    const double tau = target.delay_s();
    const double f_d = target.doppler_hz(params.f_c);
    const double xi = target.attenuation;

    // Per-axis phase ramps; the cell phase factorizes into their product.
    std::vector<cd> doppler(params.m_symbols), delay(params.n_subcarriers);
    for (int m = 0; m < params.m_symbols; ++m)
        doppler[m] = std::polar(1.0, kTwoPi * f_d * m * params.t_total);
    for (int k = 0; k < params.n_subcarriers; ++k)
        delay[k] = std::polar(1.0, -kTwoPi * k * params.delta_f * tau);

    // sigma^2 is the total complex variance, sigma^2/2 per quadrature.
    const double sigma2 = 1.0 / target.snr_linear();
    std::mt19937_64 rng(noise_seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));

    ResourceGrid out(grid.n_subcarriers, grid.m_symbols);
    out.occupied = grid.occupied;
    for (int m = 0; m < grid.m_symbols; ++m) {
        for (int k = 0; k < grid.n_subcarriers; ++k) {
            const std::size_t idx = grid.index(k, m);
            if (grid.occupied[idx]) {
                cd v = xi * grid.cells[idx] * doppler[m] * delay[k];
                if (opts.add_noise) v += complex_gaussian(rng, gauss);
                out.cells[idx] = v;
            } else if (opts.add_noise && opts.noise_on_unoccupied) {
                out.cells[idx] = complex_gaussian(rng, gauss);
            }
        }
    }
    return out;
}

DelayRounding rounded_delay(const OfdmParams& params,
                            const TargetScenario& target) {
    const double tau = target.delay_s();
    int samples = static_cast<int>(std::lround(tau / params.sample_interval));
    return {samples, tau - samples * params.sample_interval};
}

SampleStream apply_time_domain_oracle(const SampleStream& stream,
                                      const OfdmParams& params,
                                      const TargetScenario& target,
                                      std::uint64_t noise_seed,
                                      const ChannelOpts& opts) {
    target.validate();
    const auto delay = rounded_delay(params, target);
    if (delay.samples < 0 ||
        static_cast<std::size_t>(delay.samples) >= stream.samples.size())
        throw ConfigError("apply_time_domain_oracle: delay exceeds stream");

    const double f_d = target.doppler_hz(params.f_c);
    const double xi = target.attenuation;
    const double dt = stream.sample_interval;

    const double sigma2 = 1.0 / target.snr_linear();
    std::mt19937_64 rng(noise_seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(sigma2 / 2.0));

    SampleStream out = stream;
    const std::size_t n = stream.samples.size();
    for (std::size_t i = 0; i < n; ++i) {
        cd v = (i < static_cast<std::size_t>(delay.samples))
                   ? cd{0.0, 0.0}
                   : stream.samples[i - delay.samples];
        v *= xi * std::polar(1.0, kTwoPi * f_d * static_cast<double>(i) * dt);
        if (opts.add_noise) v += complex_gaussian(rng, gauss);
        out.samples[i] = v;
    }
    return out;
}

} // namespace isac
