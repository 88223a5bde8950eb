#ifndef ISAC_CRLB_HPP
#define ISAC_CRLB_HPP

#include <span>
#include <string>
#include <vector>

#include "isac/types.hpp"

namespace isac {

enum class CrlbMethod { ClosedForm, NumericFisher };

/// Reading of the bare N (range bound) and bare M (velocity bound) in the
/// closed-form expressions: total grid dimensions or extracted comb counts.
enum class BareDimension { TotalGrid, ExtractedComb };

struct CrlbInputs {
    double gamma_linear = 1.0; // SNR, linear
    double xi = 1.0;           // attenuation
    double delta_f = 0.0;
    double t_s = 0.0;          // total symbol duration
    double f_c = 0.0;
    int m_j = 0;               // DMRS-bearing symbol count
    int n_j = 0;               // DMRS subcarrier count per symbol
    int n_total = 0;
    int m_total = 0;
    int comb_carrier = 2;
    int comb_symbol = 3;

    static CrlbInputs from(const OfdmParams& params, const DmrsConfig& cfg,
                           double gamma_linear, double xi = 1.0);
};

struct CrlbReport {
    double crlb_range_m2 = 0.0;
    double crlb_velocity_mps2 = 0.0;
    double root_crlb_range_m = 0.0;
    double root_crlb_velocity_mps = 0.0;
    CrlbMethod method = CrlbMethod::ClosedForm;
    double fisher_condition = 0.0; // NumericFisher only
    CrlbInputs inputs;
};

/// Closed-form bounds evaluated verbatim, including the comb-factor and
/// f_c placements exactly as printed:
///   CRLB(R) = c^2 / (xi^2 g (2 pi df)^2 K_s) * 12 / (M_J N (N_J-1)(7 N_J+1))
///   CRLB(v) = c^2 / (xi^2 g (2 pi T_s)^2 f_c K_c) * 12 / (N_J M (M_J-1)(7 M_J+1))
/// Note f_c enters the velocity bound unsquared; the numeric Fisher path
/// is the reference for absolute levels.
CrlbReport crlb_closed_form(const CrlbInputs& in,
                            BareDimension bare = BareDimension::TotalGrid);

/// 2x2 Fisher matrix of (tau, f_d) from the analytic log-likelihood
/// curvature summed over the actual occupied lattice, inverted and
/// converted via CRLB(R) = c^2/4 CRLB(tau), CRLB(v) = c^2/(4 f_c^2) CRLB(f_d).
CrlbReport crlb_numeric_fisher(const OfdmParams& params, const DmrsConfig& cfg,
                               double gamma_linear, double xi = 1.0);

/// Lattice-level Fisher computation. doppler_coeff holds the per-column
/// time coordinates (seconds), delay_coeff the per-row frequency
/// coordinates (Hz); cells are their cartesian product.
CrlbReport fisher_from_lattice(std::span<const double> doppler_coeff,
                               std::span<const double> delay_coeff,
                               double gamma_linear, double xi, double f_c);

} // namespace isac

#endif
