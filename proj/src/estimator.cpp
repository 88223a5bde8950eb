#include "isac/estimator.hpp"

#include <algorithm>
#include <numeric>

#include "isac/fft.hpp"

namespace isac {

namespace {

QuotientGrid extract_impl(const ResourceGrid& rx, const ResourceGrid& tx,
                          const OfdmParams& params, int comb_symbol) {
    if (rx.n_subcarriers != tx.n_subcarriers || rx.m_symbols != tx.m_symbols)
        throw ShapeError("extract_quotient: rx/tx shapes differ");
    if (rx.occupied != tx.occupied)
        throw ShapeError("extract_quotient: rx/tx occupancy differs");

    QuotientGrid q;
    q.params = params;
    q.comb_symbol = comb_symbol;
    q.col_positions = tx.occupied_symbols();
    q.n_cols = static_cast<int>(q.col_positions.size());
    if (q.n_cols == 0) return q;

    auto rows = tx.occupied_subcarriers(q.col_positions.front());
    q.n_rows = static_cast<int>(rows.size());
    q.row_offset = rows.front();
    q.row_comb = q.n_rows > 1 ? rows[1] - rows[0] : 1;
    for (std::size_t i = 2; i < rows.size(); ++i)
        if (rows[i] - rows[i - 1] != q.row_comb)
            throw ShapeError("extract_quotient: non-uniform subcarrier comb");

    q.cells.resize(static_cast<std::size_t>(q.n_rows) * q.n_cols);
    for (int j = 0; j < q.n_cols; ++j) {
        const int m = q.col_positions[j];
        if (tx.occupied_subcarriers(m) != rows)
            throw ShapeError("extract_quotient: comb differs between symbols");
        for (int i = 0; i < q.n_rows; ++i) {
            const cd t = tx.at(rows[i], m);
            if (std::abs(t) == 0.0)
                throw ShapeError("extract_quotient: zero transmit symbol");
            q.at(i, j) = rx.at(rows[i], m) / t;
        }
    }
    return q;
}

std::size_t argmax(const std::vector<double>& v) {
    return static_cast<std::size_t>(
        std::max_element(v.begin(), v.end()) - v.begin());
}

int doppler_fft_len(const QuotientGrid& q, const EstimatorOpts& opts) {
    return q.params.m_symbols * opts.doppler_pad;
}

double doppler_stride(const QuotientGrid& q, const EstimatorOpts& opts) {
    return opts.doppler_path == DopplerPath::UniformComb
               ? q.comb_symbol * q.params.t_total
               : q.params.t_total;
}

} // namespace

QuotientGrid extract_quotient(const ResourceGrid& rx, const ResourceGrid& tx,
                              const OfdmParams& params) {
    return extract_impl(rx, tx, params, 1);
}

QuotientGrid extract_quotient(const ResourceGrid& rx, const ResourceGrid& tx,
                              const OfdmParams& params, const DmrsConfig& cfg) {
    return extract_impl(rx, tx, params, cfg.comb_symbol);
}

SensingEstimate estimate(const QuotientGrid& q, const EstimatorOpts& opts) {
    if (q.n_rows == 0 || q.n_cols == 0)
        throw ShapeError("estimate: empty quotient grid");
    double energy = 0.0;
    for (const cd& c : q.cells) energy += std::norm(c);
    if (energy == 0.0) throw ShapeError("estimate: all-zero quotient grid");

    SensingEstimate est;

    // Range: IFFT down the subcarrier axis.
    const int n_fft = q.n_rows * opts.range_pad;
    std::vector<double> range_profile(n_fft, 0.0);
    auto add_column = [&](int j, bool accumulate) {
        std::vector<cd> col(n_fft, cd{0.0, 0.0});
        for (int i = 0; i < q.n_rows; ++i) col[i] = q.at(i, j);
        auto spec = ifft_unitary(col);
        for (int r = 0; r < n_fft; ++r) {
            double mag = std::abs(spec[r]);
            range_profile[r] = accumulate ? range_profile[r] + mag : mag;
        }
    };
    if (opts.combine == Combine::MagnitudeSum) {
        for (int j = 0; j < q.n_cols; ++j) add_column(j, true);
    } else {
        int best = 0;
        double best_energy = -1.0;
        for (int j = 0; j < q.n_cols; ++j) {
            double e = 0.0;
            for (int i = 0; i < q.n_rows; ++i) e += std::norm(q.at(i, j));
            if (e > best_energy) { best_energy = e; best = j; }
        }
        add_column(best, false);
    }
    est.range_index = static_cast<int>(argmax(range_profile));
    const double delta_r =
        kSpeedOfLight / (2.0 * n_fft * q.row_comb * q.params.delta_f);
    est.range_m = est.range_index * delta_r;
    est.peak_magnitude = range_profile[est.range_index];
    est.range_profile = std::move(range_profile);

    // Velocity: FFT along the symbol axis.
    const int m_fft = doppler_fft_len(q, opts);
    const double stride = doppler_stride(q, opts);
    std::vector<double> doppler_profile(m_fft, 0.0);
    auto add_row = [&](int i, bool accumulate) {
        std::vector<cd> row(m_fft, cd{0.0, 0.0});
        for (int j = 0; j < q.n_cols; ++j) {
            int slot = opts.doppler_path == DopplerPath::UniformComb
                           ? j
                           : q.col_positions[j];
            if (slot < m_fft) row[slot] = q.at(i, j);
        }
        auto spec = fft_unitary(row);
        for (int d = 0; d < m_fft; ++d) {
            double mag = std::abs(spec[d]);
            doppler_profile[d] = accumulate ? doppler_profile[d] + mag : mag;
        }
    };
    if (opts.combine == Combine::MagnitudeSum) {
        for (int i = 0; i < q.n_rows; ++i) add_row(i, true);
    } else {
        int best = 0;
        double best_energy = -1.0;
        for (int i = 0; i < q.n_rows; ++i) {
            double e = 0.0;
            for (int j = 0; j < q.n_cols; ++j) e += std::norm(q.at(i, j));
            if (e > best_energy) { best_energy = e; best = i; }
        }
        add_row(best, false);
    }
    est.velocity_index = static_cast<int>(argmax(doppler_profile));
    const double delta_v =
        kSpeedOfLight / (2.0 * m_fft * stride * q.params.f_c);
    int signed_index = est.velocity_index;
    if (opts.signed_velocity && signed_index > m_fft / 2)
        signed_index -= m_fft;
    est.velocity_mps = signed_index * delta_v;
    est.doppler_profile = std::move(doppler_profile);
    return est;
}

SensingBounds bounds(const OfdmParams& params, const DmrsConfig& cfg) {
    cfg.validate(params);
    const int n_j =
        (params.n_subcarriers - cfg.carrier_offset + cfg.comb_carrier - 1) /
        cfg.comb_carrier;
    SensingBounds b;
    b.r_max = kSpeedOfLight / (2.0 * cfg.comb_carrier * params.delta_f);
    b.delta_r =
        kSpeedOfLight / (2.0 * n_j * cfg.comb_carrier * params.delta_f);
    b.v_max =
        kSpeedOfLight / (2.0 * cfg.comb_symbol * params.t_total * params.f_c);
    b.delta_v = kSpeedOfLight / (2.0 * params.m_symbols * cfg.comb_symbol *
                                 params.t_total * params.f_c);
    return b;
}

SensingBounds grid_spans(const QuotientGrid& q, const EstimatorOpts& opts) {
    SensingBounds b;
    const int n_fft = q.n_rows * opts.range_pad;
    b.delta_r = kSpeedOfLight / (2.0 * n_fft * q.row_comb * q.params.delta_f);
    b.r_max = n_fft * b.delta_r;
    const int m_fft = doppler_fft_len(q, opts);
    b.delta_v = kSpeedOfLight /
                (2.0 * m_fft * doppler_stride(q, opts) * q.params.f_c);
    b.v_max = m_fft * b.delta_v;
    return b;
}

} // namespace isac
