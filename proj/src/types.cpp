#include "isac/types.hpp"

#include <algorithm>

namespace isac {

namespace {

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace

OfdmParams OfdmParams::make(double delta_f, int n_subcarriers, int m_symbols,
                            double t_cp, double f_c, int n_ifft) {
    if (delta_f <= 0.0) throw ConfigError("delta_f must be positive");
    if (n_subcarriers <= 0) throw ConfigError("n_subcarriers must be positive");
    if (m_symbols <= 0) throw ConfigError("m_symbols must be positive");
    if (f_c <= 0.0) throw ConfigError("f_c must be positive");
    if (t_cp < 0.0) throw ConfigError("t_cp must be non-negative");

    OfdmParams p;
    p.delta_f = delta_f;
    p.n_subcarriers = n_subcarriers;
    p.m_symbols = m_symbols;
    p.f_c = f_c;
    p.n_ifft = n_ifft > 0 ? n_ifft : next_pow2(n_subcarriers);
    if (p.n_ifft < n_subcarriers)
        throw ConfigError("n_ifft must be at least n_subcarriers");
    p.t_symbol = 1.0 / delta_f;
    p.sample_interval = p.t_symbol / p.n_ifft;
    p.t_cp = t_cp;
    p.t_total = p.t_symbol + p.t_cp;
    return p;
}

OfdmParams OfdmParams::table_defaults() {
    // CP = 18/256 of the useful symbol: 0.5859375 us at 120 kHz spacing,
    // giving T_s = 8.919 us and an integer CP sample count at every
    // power-of-two IFFT length >= 256.
    const double t_cp = (18.0 / 256.0) / 120e3;
    return make(120e3, 256, 140, t_cp, 24e9);
}

std::vector<int> DmrsConfig::type_a_positions(int m_symbols) {
    static constexpr int kSlotLen = 14;
    static constexpr int kOffsets[] = {2, 5, 8, 11};
    std::vector<int> out;
    for (int base = 0; base < m_symbols; base += kSlotLen)
        for (int off : kOffsets)
            if (base + off < m_symbols) out.push_back(base + off);
    return out;
}

DmrsConfig DmrsConfig::table_defaults(int m_symbols) {
    DmrsConfig cfg;
    cfg.symbol_positions = type_a_positions(m_symbols);
    return cfg;
}

void DmrsConfig::validate(const OfdmParams& params) const {
    if (comb_carrier != 2 && comb_carrier != 4)
        throw ConfigError("comb_carrier must be 2 or 4");
    if (comb_symbol != 3 && comb_symbol != 4 && comb_symbol != 6 &&
        comb_symbol != 12)
        throw ConfigError("comb_symbol must be one of {3,4,6,12}");
    if (carrier_offset < 0 || carrier_offset >= comb_carrier)
        throw ConfigError("carrier_offset must lie in [0, comb_carrier)");
    int prev = -1;
    for (int pos : symbol_positions) {
        if (pos < 0 || pos >= params.m_symbols)
            throw ConfigError("symbol position " + std::to_string(pos) +
                              " out of range [0, " +
                              std::to_string(params.m_symbols) + ")");
        if (pos <= prev)
            throw ConfigError("symbol_positions must be strictly increasing");
        prev = pos;
    }
}

std::size_t ResourceGrid::occupied_count() const {
    return static_cast<std::size_t>(
        std::count(occupied.begin(), occupied.end(), std::uint8_t{1}));
}

std::vector<int> ResourceGrid::occupied_symbols() const {
    std::vector<int> out;
    for (int m = 0; m < m_symbols; ++m) {
        for (int k = 0; k < n_subcarriers; ++k) {
            if (is_occupied(k, m)) {
                out.push_back(m);
                break;
            }
        }
    }
    return out;
}

std::vector<int> ResourceGrid::occupied_subcarriers(int m) const {
    std::vector<int> out;
    for (int k = 0; k < n_subcarriers; ++k)
        if (is_occupied(k, m)) out.push_back(k);
    return out;
}

void TargetScenario::validate() const {
    if (range_m < 0.0) throw ConfigError("range_m must be non-negative");
    if (attenuation <= 0.0) throw ConfigError("attenuation must be positive");
    if (snr_linear() <= 0.0) throw ConfigError("snr must be positive (linear)");
}

} // namespace isac
