#ifndef ISAC_CHANNEL_HPP
#define ISAC_CHANNEL_HPP

#include <cstdint>

#include "isac/ofdm.hpp"
#include "isac/types.hpp"

namespace isac {

struct ChannelOpts {
    bool add_noise = true;
    bool noise_on_unoccupied = false;
};

/// Point-target echo in the modulation-symbol domain: each occupied cell
/// (k, m) is scaled by the attenuation, rotated by the Doppler ramp
/// exp(+j 2 pi f_d m T_s) over the absolute symbol index and by the delay
/// ramp exp(-j 2 pi k delta_f tau) over the absolute subcarrier index.
/// Complex AWGN of total variance sigma^2 = A^2 / gamma (A = 1) is added
/// to every occupied cell.
ResourceGrid apply_symbol_domain(const ResourceGrid& grid,
                                 const OfdmParams& params,
                                 const TargetScenario& target,
                                 std::uint64_t noise_seed,
                                 const ChannelOpts& opts = {});

/// Time-domain reference path: delay by round(tau / sample_interval)
/// samples (zero-filled head), multiply by xi * exp(j 2 pi f_d t), add
/// complex AWGN per sample. Kept for cross-validating the symbol-domain
/// channel.
SampleStream apply_time_domain_oracle(const SampleStream& stream,
                                      const OfdmParams& params,
                                      const TargetScenario& target,
                                      std::uint64_t noise_seed,
                                      const ChannelOpts& opts = {});

/// Integer sample delay used by the time-domain path, plus the rounding
/// residual in seconds.
struct DelayRounding {
    int samples;
    double residual_s;
};
DelayRounding rounded_delay(const OfdmParams& params,
                            const TargetScenario& target);

} // namespace isac

#endif
