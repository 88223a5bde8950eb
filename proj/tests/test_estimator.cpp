#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "isac/channel.hpp"
#include "isac/estimator.hpp"
#include "isac/refsig.hpp"

using namespace isac;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ChannelOpts noiseless() {
    ChannelOpts o;
    o.add_noise = false;
    return o;
}

// Quotient grid built directly: one row, columns at the given absolute
// symbol positions, cell phase exp(j 2 pi f_d * t(column)).
QuotientGrid synthetic_doppler(const OfdmParams& p, std::vector<int> positions,
                               double f_d, int comb_symbol) {
    QuotientGrid q;
    q.params = p;
    q.n_rows = 1;
    q.n_cols = static_cast<int>(positions.size());
    q.col_positions = std::move(positions);
    q.comb_symbol = comb_symbol;
    q.cells.resize(q.n_cols);
    for (int j = 0; j < q.n_cols; ++j)
        q.at(0, j) =
            std::polar(1.0, kTwoPi * f_d * q.col_positions[j] * p.t_total);
    return q;
}

} // namespace

TEST_CASE("quotient of rx == tx is all ones") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    auto q = extract_quotient(tx, tx, p, cfg);
    CHECK(q.n_rows == 128);
    CHECK(q.n_cols == 40);
    CHECK(q.row_comb == 2);
    CHECK(q.row_offset == 0);
    CHECK(q.comb_symbol == 3);
    for (const cd& c : q.cells) CHECK(std::abs(c - cd{1.0, 0.0}) <= 1e-14);
}

TEST_CASE("quotient divides out the waveform, keeping the channel") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t;
    t.attenuation = 0.5;
    t.range_m = 0.0;
    t.velocity_mps = 0.0;
    auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
    auto q = extract_quotient(rx, tx, p, cfg);
    for (const cd& c : q.cells) CHECK(std::abs(c - cd{0.5, 0.0}) <= 1e-14);
}

TEST_CASE("noiseless point target yields a rank-one quotient") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t; // 48 m, 18 m/s
    auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
    auto q = extract_quotient(rx, tx, p, cfg);
    // q(i, j) = col(j) * row(i): cross-ratios cancel.
    for (int i = 1; i < q.n_rows; ++i)
        for (int j = 1; j < q.n_cols; ++j) {
            cd lhs = q.at(i, j) * q.at(0, 0);
            cd rhs = q.at(i, 0) * q.at(0, j);
            CHECK(std::abs(lhs - rhs) <= 1e-12);
        }
}

TEST_CASE("range estimate, 512 subcarriers, 48 m") {
    auto p = OfdmParams::make(120e3, 512, 14, (18.0 / 256.0) / 120e3, 24e9);
    auto cfg = DmrsConfig::table_defaults(p.m_symbols);
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t;
    t.range_m = 48.0;
    t.velocity_mps = 0.0;
    auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
    auto est = estimate(extract_quotient(rx, tx, p, cfg));
    CHECK(est.range_index == 20);
    CHECK(est.range_m == doctest::Approx(48.79434537760417).epsilon(1e-12));
    CHECK(est.range_profile.size() == 256);
}

TEST_CASE("zero target estimates to the zero bins") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t;
    t.range_m = 0.0;
    t.velocity_mps = 0.0;
    auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
    auto est = estimate(extract_quotient(rx, tx, p, cfg));
    CHECK(est.range_index == 0);
    CHECK(est.velocity_index == 0);
    CHECK(est.range_m == 0.0);
    CHECK(est.velocity_mps == 0.0);
}

TEST_CASE("velocity estimate on the full time grid, no padding") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t;
    t.range_m = 0.0;
    t.velocity_mps = 18.0;
    auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
    EstimatorOpts opts;
    opts.doppler_pad = 1;
    auto est = estimate(extract_quotient(rx, tx, p, cfg), opts);
    CHECK(est.velocity_index == 4);
    CHECK(est.velocity_mps == doctest::Approx(20.007004496350365).epsilon(1e-12));
    CHECK(est.doppler_profile.size() == 140);
}

TEST_CASE("velocity estimate with the default 4x padding") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t;
    t.range_m = 0.0;
    t.velocity_mps = 18.0;
    auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
    auto est = estimate(extract_quotient(rx, tx, p, cfg));
    CHECK(est.velocity_index == 14);
    CHECK(est.velocity_mps == doctest::Approx(17.50612893430657).epsilon(1e-12));
    CHECK(est.doppler_profile.size() == 560);
}

TEST_CASE("uniform-comb path packs columns at the nominal stride") {
    auto p = OfdmParams::table_defaults();
    // Exactly uniform phase progression at stride 3 T_s: the packed
    // transform sees an 18 m/s target through the comb formulas.
    const double f_d = 2.0 * 18.0 * p.f_c / kSpeedOfLight;
    std::vector<int> positions(40);
    for (int j = 0; j < 40; ++j) positions[j] = 3 * j;
    QuotientGrid q;
    q.params = p;
    q.n_rows = 1;
    q.n_cols = 40;
    q.col_positions = positions;
    q.comb_symbol = 3;
    q.cells.resize(40);
    for (int j = 0; j < 40; ++j)
        q.at(0, j) = std::polar(1.0, kTwoPi * f_d * j * 3.0 * p.t_total);
    EstimatorOpts opts;
    opts.doppler_pad = 1;
    opts.doppler_path = DopplerPath::UniformComb;
    auto est = estimate(q, opts);
    CHECK(est.velocity_index == 11);
    CHECK(est.velocity_mps == doctest::Approx(18.3397541216545).epsilon(1e-12));
}

TEST_CASE("signed velocity maps upper-half bins negative") {
    auto p = OfdmParams::table_defaults();
    std::vector<int> positions(p.m_symbols);
    for (int m = 0; m < p.m_symbols; ++m) positions[m] = m;
    // Exactly bin -5 of the unpadded length-140 transform.
    const double f_d = -5.0 / (p.m_symbols * p.t_total);
    auto q = synthetic_doppler(p, positions, f_d, 1);
    EstimatorOpts opts;
    opts.doppler_pad = 1;
    opts.signed_velocity = true;
    auto est = estimate(q, opts);
    CHECK(est.velocity_index == 135);
    const double dv =
        kSpeedOfLight / (2.0 * p.m_symbols * p.t_total * p.f_c);
    CHECK(est.velocity_mps == doctest::Approx(-5.0 * dv).epsilon(1e-12));
}

TEST_CASE("argmax is scale invariant") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t; // defaults: 48 m, 18 m/s
    auto rx = apply_symbol_domain(tx, p, t, 77);
    auto q = extract_quotient(rx, tx, p, cfg);
    auto scaled = q;
    for (cd& c : scaled.cells) c *= 1e6;
    auto a = estimate(q);
    auto b = estimate(scaled);
    CHECK(a.range_index == b.range_index);
    CHECK(a.velocity_index == b.velocity_index);
}

TEST_CASE("magnitude-sum combining agrees with single-peak when noiseless") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    TargetScenario t;
    auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
    auto q = extract_quotient(rx, tx, p, cfg);
    EstimatorOpts sum_opts;
    sum_opts.combine = Combine::MagnitudeSum;
    auto single = estimate(q);
    auto summed = estimate(q, sum_opts);
    CHECK(single.range_index == summed.range_index);
    CHECK(single.velocity_index == summed.velocity_index);
}

TEST_CASE("range index grows with range, velocity index with speed") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    int prev_r = -1, prev_v = -1;
    for (double scale : {1.0, 2.0, 4.0}) {
        TargetScenario t;
        t.range_m = 40.0 * scale;
        t.velocity_mps = 15.0 * scale;
        auto rx = apply_symbol_domain(tx, p, t, 0, noiseless());
        auto est = estimate(extract_quotient(rx, tx, p, cfg));
        CHECK(est.range_index > prev_r);
        CHECK(est.velocity_index > prev_v);
        prev_r = est.range_index;
        prev_v = est.velocity_index;
    }
}

TEST_CASE("estimate rejects degenerate quotients") {
    QuotientGrid empty;
    CHECK_THROWS_AS(estimate(empty), ShapeError);
    auto p = OfdmParams::table_defaults();
    auto q = synthetic_doppler(p, {0, 3, 6}, 0.0, 3);
    for (cd& c : q.cells) c = cd{0.0, 0.0};
    CHECK_THROWS_AS(estimate(q), ShapeError);
}

TEST_CASE("extraction rejects mismatched occupancy and zero pilots") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    auto rx = tx;
    rx.set(1, 0, cd{1.0, 0.0}); // extra occupied cell
    CHECK_THROWS_AS(extract_quotient(rx, tx, p, cfg), ShapeError);

    auto tx_zero = tx;
    tx_zero.set(0, 2, cd{0.0, 0.0});
    CHECK_THROWS_AS(extract_quotient(tx_zero, tx_zero, p, cfg), ShapeError);

    ResourceGrid ragged(p.n_subcarriers, p.m_symbols);
    ragged.set(0, 2, cd{1.0, 0.0});
    ragged.set(2, 2, cd{1.0, 0.0});
    ragged.set(6, 2, cd{1.0, 0.0}); // stride 2 then 4
    CHECK_THROWS_AS(extract_quotient(ragged, ragged, p), ShapeError);
}

TEST_CASE("bounds at the default numerology") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto b = bounds(p, cfg);
    CHECK(b.r_max == doctest::Approx(624.5676208333333).epsilon(1e-12));
    CHECK(b.delta_r == doctest::Approx(4.8794345377604165).epsilon(1e-12));
    CHECK(b.v_max == doctest::Approx(233.41505245742093).epsilon(1e-12));
    CHECK(b.delta_v == doctest::Approx(1.6672503746958638).epsilon(1e-12));
    CHECK(b.r_max == doctest::Approx(128 * b.delta_r).epsilon(1e-12));
    CHECK(b.v_max == doctest::Approx(140 * b.delta_v).epsilon(1e-12));
}

TEST_CASE("grid spans reflect the estimator options") {
    auto p = OfdmParams::table_defaults();
    auto cfg = DmrsConfig::table_defaults();
    auto tx = build_dmrs_grid(p, cfg);
    auto q = extract_quotient(tx, tx, p, cfg);
    EstimatorOpts opts;
    auto s = grid_spans(q, opts);
    CHECK(s.delta_r ==
          doctest::Approx(kSpeedOfLight / (2.0 * 128 * 2 * p.delta_f))
              .epsilon(1e-12));
    CHECK(s.r_max == doctest::Approx(128 * s.delta_r).epsilon(1e-12));
    // Padding refines the bins without changing the span.
    EstimatorOpts padded = opts;
    padded.range_pad = 2;
    auto s2 = grid_spans(q, padded);
    CHECK(s2.delta_r == doctest::Approx(s.delta_r / 2).epsilon(1e-12));
    CHECK(s2.r_max == doctest::Approx(s.r_max).epsilon(1e-12));
    CHECK(s.delta_v ==
          doctest::Approx(kSpeedOfLight / (2.0 * 560 * p.t_total * p.f_c))
              .epsilon(1e-12));
}
