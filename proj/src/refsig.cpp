#include "isac/refsig.hpp"

#include <ostream>
#include <random>

namespace isac {

std::vector<std::uint8_t> gold_sequence(std::uint64_t seed, std::size_t length) {
    if (length == 0)
        throw ConfigError("gold_sequence: requested length is zero");

    static constexpr std::size_t kWarmup = 1600;
    const std::size_t total = kWarmup + length + 31;

    std::vector<std::uint8_t> x1(total, 0), x2(total, 0);
    x1[0] = 1;
    for (int i = 0; i < 31; ++i)
        x2[i] = static_cast<std::uint8_t>((seed >> i) & 1u);

    for (std::size_t n = 0; n + 31 < total; ++n) {
        x1[n + 31] = static_cast<std::uint8_t>((x1[n + 3] + x1[n]) & 1u);
        x2[n + 31] = static_cast<std::uint8_t>(
            (x2[n + 3] + x2[n + 2] + x2[n + 1] + x2[n]) & 1u);
    }

    std::vector<std::uint8_t> out(length);
    for (std::size_t n = 0; n < length; ++n)
        out[n] = static_cast<std::uint8_t>((x1[kWarmup + n] + x2[kWarmup + n]) & 1u);
    return out;
}

std::vector<cd> qpsk_map(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0)
        throw ShapeError("qpsk_map: bit count must be even");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<cd> out(bits.size() / 2);
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] = cd{(1.0 - 2.0 * bits[2 * n]) * inv_sqrt2,
                    (1.0 - 2.0 * bits[2 * n + 1]) * inv_sqrt2};
    }
    return out;
}

ResourceGrid build_dmrs_grid(const OfdmParams& params, const DmrsConfig& cfg) {
    cfg.validate(params);
    ResourceGrid grid(params.n_subcarriers, params.m_symbols);
    for (int m : cfg.symbol_positions) {
        std::size_t n_re =
            static_cast<std::size_t>(
                (params.n_subcarriers - cfg.carrier_offset + cfg.comb_carrier - 1) /
                cfg.comb_carrier);
        if (n_re == 0) continue;
        auto bits = gold_sequence(cfg.seed + static_cast<std::uint64_t>(m),
                                  2 * n_re);
        auto symbols = qpsk_map(bits);
        std::size_t i = 0;
        for (int k = cfg.carrier_offset; k < params.n_subcarriers;
             k += cfg.comb_carrier)
            grid.set(k, m, symbols[i++]);
    }
    return grid;
}

ResourceGrid build_data_grid(const OfdmParams& params, std::uint64_t seed) {
    ResourceGrid grid(params.n_subcarriers, params.m_symbols);
    std::mt19937_64 rng(seed);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int m = 0; m < params.m_symbols; ++m) {
        for (int k = 0; k < params.n_subcarriers; ++k) {
            auto r = rng();
            grid.set(k, m,
                     cd{(r & 1u ? -1.0 : 1.0) * inv_sqrt2,
                        (r & 2u ? -1.0 : 1.0) * inv_sqrt2});
        }
    }
    return grid;
}

void write_grid_csv(const ResourceGrid& grid, std::ostream& os) {
    os << "k,m,re,im,occupied\n";
    for (int m = 0; m < grid.m_symbols; ++m) {
        for (int k = 0; k < grid.n_subcarriers; ++k) {
            const cd& v = grid.at(k, m);
            os << k << ',' << m << ',' << v.real() << ',' << v.imag() << ','
               << (grid.is_occupied(k, m) ? 1 : 0) << '\n';
        }
    }
}

} // namespace isac
