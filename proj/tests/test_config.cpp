#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "isac/config.hpp"

using namespace isac;

namespace {

SweepSpec spec_of(const std::string& text) {
    std::istringstream is(text);
    return RunConfig::parse(is).to_spec();
}

} // namespace

TEST_CASE("empty config yields the default spec") {
    auto spec = spec_of("");
    CHECK(spec.params.delta_f == 120e3);
    CHECK(spec.params.n_subcarriers == 256);
    CHECK(spec.params.m_symbols == 140);
    CHECK(spec.params.f_c == 24e9);
    CHECK(spec.cfg.comb_carrier == 2);
    CHECK(spec.cfg.symbol_positions.size() == 40);
    CHECK(spec.target.range_m == 48.0);
    CHECK(spec.target.velocity_mps == 18.0);
    CHECK(spec.target.snr_db == 10.0);
    CHECK(spec.trials == 1000);
    CHECK(spec.master_seed == 1);
    CHECK(spec.signal == SignalKind::Dmrs);
    CHECK(spec.noise);
    CHECK(spec.est.doppler_pad == 4);
    CHECK(spec.est.combine == Combine::SinglePeak);
}

TEST_CASE("comments and blank lines are ignored") {
    auto spec = spec_of("# header comment\n"
                        "\n"
                        "range_m = 100  # trailing comment\n"
                        "   \t \n"
                        "snr_db=-3\n");
    CHECK(spec.target.range_m == 100.0);
    CHECK(spec.target.snr_db == -3.0);
}

TEST_CASE("all value kinds parse") {
    auto spec = spec_of("delta_f = 60e3\n"
                        "n_subcarriers = 512\n"
                        "m_symbols = 28\n"
                        "velocity_mps = -7.5\n"
                        "trials = 32\n"
                        "master_seed = 99\n"
                        "noise = off\n"
                        "exclude_failures = true\n"
                        "signal = data\n"
                        "sweep_axis = delta_f\n"
                        "sweep_values = 30e3, 60e3, 120e3\n"
                        "doppler_path = uniform\n"
                        "combine = sum\n"
                        "signed_velocity = 1\n"
                        "range_pad = 2\n"
                        "doppler_pad = 8\n");
    CHECK(spec.params.delta_f == 60e3);
    CHECK(spec.params.n_subcarriers == 512);
    CHECK(spec.params.n_ifft == 512);
    CHECK(spec.params.m_symbols == 28);
    CHECK(spec.cfg.symbol_positions.size() == 8);
    CHECK(spec.target.velocity_mps == -7.5);
    CHECK(spec.trials == 32);
    CHECK(spec.master_seed == 99);
    CHECK_FALSE(spec.noise);
    CHECK(spec.exclude_failures);
    CHECK(spec.signal == SignalKind::Data);
    CHECK(spec.axis == SweepAxis::DeltaF);
    CHECK(spec.values == std::vector<double>{30e3, 60e3, 120e3});
    CHECK(spec.est.doppler_path == DopplerPath::UniformComb);
    CHECK(spec.est.combine == Combine::MagnitudeSum);
    CHECK(spec.est.signed_velocity);
    CHECK(spec.est.range_pad == 2);
    CHECK(spec.est.doppler_pad == 8);
}

TEST_CASE("explicit symbol positions override the type-a layout") {
    auto spec = spec_of("m_symbols = 14\nsymbol_positions = 0, 4, 9, 13\n");
    CHECK(spec.cfg.symbol_positions == std::vector<int>{0, 4, 9, 13});
}

TEST_CASE("unknown keys are rejected") {
    std::istringstream is("rnage_m = 48\n");
    CHECK_THROWS_AS(RunConfig::parse(is), ConfigError);
}

TEST_CASE("malformed lines and values are rejected") {
    std::istringstream no_eq("range_m 48\n");
    CHECK_THROWS_AS(RunConfig::parse(no_eq), ConfigError);
    CHECK_THROWS_AS(spec_of("range_m = fast\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("trials = 12.5\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("noise = maybe\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("signal = chirp\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("sweep_axis = phase\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("doppler_path = sideways\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("combine = median\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("range_pad = 0\n"), ConfigError);
}

TEST_CASE("semantic validation happens at spec construction") {
    CHECK_THROWS_AS(spec_of("delta_f = -1\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("comb_carrier = 3\n"), ConfigError);
    CHECK_THROWS_AS(spec_of("range_m = -4\n"), ConfigError);
    // Position past the grid.
    CHECK_THROWS_AS(spec_of("m_symbols = 14\nsymbol_positions = 0, 20\n"),
                    ConfigError);
}

TEST_CASE("missing file is reported") {
    CHECK_THROWS_AS(RunConfig::parse_file("/nonexistent/isac.conf"),
                    ConfigError);
}

TEST_CASE("parsed spec round-trips through a sweep") {
    auto spec = spec_of("trials = 4\nsweep_values = 10\nnoise = false\n"
                        "range_m = 0\nvelocity_mps = 0\n");
    auto r = run_sweep(spec);
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0].rmse_range_m == 0.0);
    CHECK(r.points[0].rmse_velocity_mps == 0.0);
}
