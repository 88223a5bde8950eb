#include "isac/crlb.hpp"

#include <limits>
#include <numbers>

namespace isac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void fill_roots(CrlbReport& r) {
    r.root_crlb_range_m = std::sqrt(r.crlb_range_m2);
    r.root_crlb_velocity_mps = std::sqrt(r.crlb_velocity_mps2);
}

} // namespace

CrlbInputs CrlbInputs::from(const OfdmParams& params, const DmrsConfig& cfg,
                            double gamma_linear, double xi) {
    CrlbInputs in;
    in.gamma_linear = gamma_linear;
    in.xi = xi;
    in.delta_f = params.delta_f;
    in.t_s = params.t_total;
    in.f_c = params.f_c;
    in.m_j = static_cast<int>(cfg.symbol_positions.size());
    in.n_j = (params.n_subcarriers - cfg.carrier_offset + cfg.comb_carrier - 1) /
             cfg.comb_carrier;
    in.n_total = params.n_subcarriers;
    in.m_total = params.m_symbols;
    in.comb_carrier = cfg.comb_carrier;
    in.comb_symbol = cfg.comb_symbol;
    return in;
}

CrlbReport crlb_closed_form(const CrlbInputs& in, BareDimension bare) {
    if (in.gamma_linear <= 0.0 || in.xi <= 0.0)
        throw ConfigError("crlb_closed_form: gamma and xi must be positive");
    if (in.m_j < 2 || in.n_j < 2)
        throw ConfigError("crlb_closed_form: degenerate configuration "
                          "(need M_J >= 2 and N_J >= 2)");

    const double n_bare =
        bare == BareDimension::TotalGrid ? in.n_total : in.n_j;
    const double m_bare =
        bare == BareDimension::TotalGrid ? in.m_total : in.m_j;
    const double c2 = kSpeedOfLight * kSpeedOfLight;
    const double xi2g = in.xi * in.xi * in.gamma_linear;

    CrlbReport r;
    r.method = CrlbMethod::ClosedForm;
    r.inputs = in;
    r.crlb_range_m2 =
        c2 / (xi2g * std::pow(kTwoPi * in.delta_f, 2) * in.comb_symbol) *
        12.0 / (in.m_j * n_bare * (in.n_j - 1.0) * (7.0 * in.n_j + 1.0));
    r.crlb_velocity_mps2 =
        c2 / (xi2g * std::pow(kTwoPi * in.t_s, 2) * in.f_c * in.comb_carrier) *
        12.0 / (in.n_j * m_bare * (in.m_j - 1.0) * (7.0 * in.m_j + 1.0));
    fill_roots(r);
    return r;
}

CrlbReport fisher_from_lattice(std::span<const double> doppler_coeff,
                               std::span<const double> delay_coeff,
                               double gamma_linear, double xi, double f_c) {
    if (gamma_linear <= 0.0 || xi <= 0.0)
        throw ConfigError("fisher_from_lattice: gamma and xi must be positive");
    if (doppler_coeff.empty() || delay_coeff.empty())
        throw ConfigError("fisher_from_lattice: empty lattice");

    // Signal s = xi A exp(j 2 pi a f_d) exp(-j 2 pi b tau) per cell (a, b);
    // for complex noise of total variance sigma^2 the Fisher matrix is
    // (2 / sigma^2) Re sum(ds_i* ds_j) with sigma^2 = A^2 / gamma, A = 1.
    double sum_a = 0.0, sum_a2 = 0.0;
    for (double a : doppler_coeff) { sum_a += a; sum_a2 += a * a; }
    double sum_b = 0.0, sum_b2 = 0.0;
    for (double b : delay_coeff) { sum_b += b; sum_b2 += b * b; }

    const double m_j = static_cast<double>(doppler_coeff.size());
    const double n_j = static_cast<double>(delay_coeff.size());
    const double scale = 2.0 * gamma_linear * xi * xi * kTwoPi * kTwoPi;

    const double f_tt = scale * m_j * sum_b2;        // tau-tau
    const double f_ff = scale * n_j * sum_a2;        // f_d-f_d
    const double f_tf = -scale * sum_a * sum_b;      // cross term

    // Degeneracy is judged on the squared correlation of the two phase
    // ramps, which is scale free; the raw condition number is dominated by
    // the Hz^2 / s^2 unit mismatch and is enormous even for healthy
    // lattices. rho^2 -> 1 exactly when both coordinate sets are constant.
    const double rho2 = f_tt > 0.0 && f_ff > 0.0
                            ? (f_tf * f_tf) / (f_tt * f_ff)
                            : 1.0;
    const double det = f_tt * f_ff * (1.0 - rho2);
    const double trace = f_tt + f_ff;
    // 2x2 symmetric: the small eigenvalue comes from det / lam_max; the
    // textbook (trace - disc) / 2 cancels to zero once the eigenvalues
    // differ by more than ~1e16.
    const double disc = std::sqrt(std::max(trace * trace - 4.0 * det, 0.0));
    const double lam_max = 0.5 * (trace + disc);
    const double lam_min = lam_max > 0.0 ? det / lam_max : 0.0;

    CrlbReport r;
    r.method = CrlbMethod::NumericFisher;
    r.fisher_condition = lam_min > 0.0 ? lam_max / lam_min
                                       : std::numeric_limits<double>::infinity();
    if (f_tt <= 0.0 || f_ff <= 0.0 || 1.0 - rho2 <= 1e-12)
        throw ConfigError("fisher_from_lattice: singular Fisher matrix "
                          "(condition number " +
                          std::to_string(r.fisher_condition) + ")");

    const double crlb_tau = f_ff / det;
    const double crlb_fd = f_tt / det;
    const double c2 = kSpeedOfLight * kSpeedOfLight;
    r.crlb_range_m2 = c2 / 4.0 * crlb_tau;
    r.crlb_velocity_mps2 = c2 / (4.0 * f_c * f_c) * crlb_fd;
    fill_roots(r);
    return r;
}

CrlbReport crlb_numeric_fisher(const OfdmParams& params, const DmrsConfig& cfg,
                               double gamma_linear, double xi) {
    cfg.validate(params);
    std::vector<double> a;
    a.reserve(cfg.symbol_positions.size());
    for (int p : cfg.symbol_positions)
        a.push_back(p * params.t_total);
    std::vector<double> b;
    for (int k = cfg.carrier_offset; k < params.n_subcarriers;
         k += cfg.comb_carrier)
        b.push_back(k * params.delta_f);
    auto r = fisher_from_lattice(a, b, gamma_linear, xi, params.f_c);
    r.inputs = CrlbInputs::from(params, cfg, gamma_linear, xi);
    return r;
}

} // namespace isac
