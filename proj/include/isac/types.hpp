#ifndef ISAC_TYPES_HPP
#define ISAC_TYPES_HPP

#include <complex>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace isac {

using cd = std::complex<double>;

inline constexpr double kSpeedOfLight = 299792458.0;

/// Thrown when a parameter set or config file is inconsistent.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when array shapes or occupancy patterns do not match.
class ShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// OFDM numerology. Time quantities are derived from the subcarrier
/// spacing and the IFFT length so that sample_interval * n_ifft == t_symbol
/// holds exactly; t_cp is snapped to a whole number of samples.
struct OfdmParams {
    double delta_f = 120e3;      // subcarrier spacing, Hz
    int n_subcarriers = 256;     // grid height N
    int m_symbols = 140;         // grid width M
    double t_symbol = 0.0;       // useful symbol duration T = 1/delta_f, s
    double t_cp = 0.0;           // cyclic prefix duration, s
    double t_total = 0.0;        // T_s = T + T_cp, s
    double f_c = 24e9;           // carrier frequency, Hz
    int n_ifft = 0;              // IFFT length (>= n_subcarriers)
    double sample_interval = 0.0;// t_symbol / n_ifft, s

    /// Builds a validated parameter set. n_ifft = 0 selects the next
    /// power of two >= n_subcarriers.
    static OfdmParams make(double delta_f, int n_subcarriers, int m_symbols,
                           double t_cp, double f_c, int n_ifft = 0);

    /// Table II numerology: 120 kHz spacing, 256 subcarriers, 140 symbols,
    /// 24 GHz carrier, NR-style CP (18/256 of the symbol).
    static OfdmParams table_defaults();

    int n_cp_samples() const {
        return static_cast<int>(std::lround(t_cp / sample_interval));
    }
    int samples_per_symbol() const { return n_ifft + n_cp_samples(); }
};

/// DMRS placement: type-1 comb in frequency, explicit symbol positions in
/// time (mapping type A starts at symbol #2 of each 14-symbol slot).
struct DmrsConfig {
    int comb_carrier = 2;             // K_comb^carrier in {2,4}
    int comb_symbol = 3;              // nominal K_comb^symbol in {3,4,6,12}
    std::vector<int> symbol_positions;// DMRS-bearing OFDM symbol indices
    int carrier_offset = 0;           // first DMRS subcarrier in the comb
    std::uint64_t seed = 0;           // sequence initialization value

    /// {2,5,8,11} in every fully or partially covered 14-symbol slot.
    static std::vector<int> type_a_positions(int m_symbols);

    static DmrsConfig table_defaults(int m_symbols = 140);

    void validate(const OfdmParams& params) const;
};

/// Complex time-frequency grid, n_subcarriers rows x m_symbols columns,
/// stored column-major (all subcarriers of symbol 0, then symbol 1, ...).
struct ResourceGrid {
    int n_subcarriers = 0;
    int m_symbols = 0;
    std::vector<cd> cells;
    std::vector<std::uint8_t> occupied;

    ResourceGrid() = default;
    ResourceGrid(int n, int m)
        : n_subcarriers(n), m_symbols(m),
          cells(static_cast<std::size_t>(n) * m, cd{0.0, 0.0}),
          occupied(static_cast<std::size_t>(n) * m, 0) {}

    std::size_t index(int k, int m) const {
        return static_cast<std::size_t>(m) * n_subcarriers + k;
    }
    cd& at(int k, int m) { return cells[index(k, m)]; }
    const cd& at(int k, int m) const { return cells[index(k, m)]; }
    bool is_occupied(int k, int m) const { return occupied[index(k, m)] != 0; }
    void set(int k, int m, cd value) {
        cells[index(k, m)] = value;
        occupied[index(k, m)] = 1;
    }

    std::size_t occupied_count() const;
    /// Symbol indices that carry at least one occupied cell, ascending.
    std::vector<int> occupied_symbols() const;
    /// Subcarrier indices occupied in the given symbol, ascending.
    std::vector<int> occupied_subcarriers(int m) const;
};

/// Single point target plus the noise level of the echo.
struct TargetScenario {
    double range_m = 48.0;
    double velocity_mps = 18.0;
    double attenuation = 1.0;  // xi
    double snr_db = 10.0;      // gamma = A^2 / sigma^2 in dB

    double delay_s() const { return 2.0 * range_m / kSpeedOfLight; }
    double doppler_hz(double f_c) const {
        return 2.0 * velocity_mps * f_c / kSpeedOfLight;
    }
    double snr_linear() const { return std::pow(10.0, snr_db / 10.0); }

    void validate() const;
};

} // namespace isac

#endif
