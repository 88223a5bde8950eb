#ifndef ISAC_ESTIMATOR_HPP
#define ISAC_ESTIMATOR_HPP

#include <vector>

#include "isac/types.hpp"

namespace isac {

/// Element-wise rx/tx over the occupied cells, arranged on the extracted
/// comb grid: rows are the occupied subcarriers (uniform comb), columns
/// the occupied OFDM symbols in order.
struct QuotientGrid {
    std::vector<cd> cells;       // n_rows x n_cols, column-major
    int n_rows = 0;              // N_J
    int n_cols = 0;              // M_J
    int row_comb = 1;            // subcarrier stride of the extracted rows
    int row_offset = 0;          // absolute index of row 0
    std::vector<int> col_positions; // absolute symbol index per column
    int comb_symbol = 1;         // nominal time-domain comb (uniform path)
    OfdmParams params;           // provenance

    cd& at(int k, int m) {
        return cells[static_cast<std::size_t>(m) * n_rows + k];
    }
    const cd& at(int k, int m) const {
        return cells[static_cast<std::size_t>(m) * n_rows + k];
    }
};

/// Doppler-axis layout: FullGrid places each extracted column at its
/// absolute symbol index on a length-M time grid (stride T_s), which is
/// exact for irregular DMRS spacing; UniformComb packs the columns at
/// stride comb_symbol * T_s, an approximation when the spacing is uneven.
enum class DopplerPath { FullGrid, UniformComb };

/// Profile combining: SinglePeak transforms the single highest-energy
/// column/row, as in the per-column/per-row peak equations; MagnitudeSum
/// sums magnitudes over all columns/rows before the argmax.
enum class Combine { SinglePeak, MagnitudeSum };

struct EstimatorOpts {
    int range_pad = 1;     // zero-padding factor on the range IFFT
    int doppler_pad = 4;   // zero-padding factor on the Doppler FFT
    DopplerPath doppler_path = DopplerPath::FullGrid;
    Combine combine = Combine::SinglePeak;
    bool signed_velocity = false; // map upper-half bins to negative v
};

struct SensingEstimate {
    int range_index = 0;
    int velocity_index = 0;
    double range_m = 0.0;
    double velocity_mps = 0.0;
    double peak_magnitude = 0.0;
    std::vector<double> range_profile;
    std::vector<double> doppler_profile;
};

/// Resolution and unambiguous window (delta_r/r_max, delta_v/v_max).
struct SensingBounds {
    double r_max = 0.0;
    double v_max = 0.0;
    double delta_r = 0.0;
    double delta_v = 0.0;
};

QuotientGrid extract_quotient(const ResourceGrid& rx, const ResourceGrid& tx,
                              const OfdmParams& params);
QuotientGrid extract_quotient(const ResourceGrid& rx, const ResourceGrid& tx,
                              const OfdmParams& params, const DmrsConfig& cfg);

/// 2D-FFT estimator: IFFT down the subcarrier axis for range, FFT along
/// the symbol axis for velocity, argmax of the magnitude profiles.
SensingEstimate estimate(const QuotientGrid& q, const EstimatorOpts& opts = {});

/// Bounds from the comb formulas: R_max = c/(2 K_c df),
/// dR = c/(2 N_J K_c df), v_max = c/(2 K_s T_s f_c),
/// dv = c/(2 M K_s T_s f_c) with N_J the extracted subcarrier count and
/// M the total symbol count.
SensingBounds bounds(const OfdmParams& params, const DmrsConfig& cfg);

/// Spans and bin widths of the actual estimation grid for the given
/// options (used e.g. for gross-outlier classification).
SensingBounds grid_spans(const QuotientGrid& q, const EstimatorOpts& opts);

} // namespace isac

#endif
