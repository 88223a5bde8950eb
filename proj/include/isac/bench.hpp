#ifndef ISAC_BENCH_HPP
#define ISAC_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "isac/estimator.hpp"
#include "isac/types.hpp"

namespace isac {

enum class SignalKind { Dmrs, Data };
enum class SweepAxis { SnrDb, DeltaF, TTotal, NSubcarriers, MSymbols };
enum class ExecMode { Serial, Parallel };

struct SweepSpec {
    OfdmParams params = OfdmParams::table_defaults();
    DmrsConfig cfg = DmrsConfig::table_defaults();
    TargetScenario target;
    SweepAxis axis = SweepAxis::SnrDb;
    std::vector<double> values;       // defaults to -15..10 dB, 1 dB steps
    int trials = 1000;
    std::uint64_t master_seed = 1;
    SignalKind signal = SignalKind::Dmrs;
    bool noise = true;
    bool exclude_failures = false;    // drop gross outliers from the RMSE
    EstimatorOpts est;

    void validate() const;
    std::vector<double> effective_values() const;
};

struct SweepPoint {
    double axis_value = 0.0;
    double rmse_range_m = 0.0;
    double rmse_velocity_mps = 0.0;
    double root_crlb_range_m = 0.0;
    double root_crlb_velocity_mps = 0.0;
    double fail_fraction = 0.0;
    int trials_used = 0;
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

/// Monte Carlo RMSE sweep: per point, `trials` independent trials
/// (grid -> symbol-domain echo -> quotient -> estimate) with derived noise
/// seeds. A trial is a detection failure when the absolute range error
/// exceeds R_max/4 or the velocity error exceeds v_max/4 of the estimation
/// grid. Serial and parallel execution produce bitwise-identical results.
SweepResult run_sweep(const SweepSpec& spec, ExecMode mode = ExecMode::Parallel);

/// Runs the sweep once per signal kind with identical seeds.
std::pair<SweepResult, SweepResult> compare_signals(const SweepSpec& spec);

/// CSV, header: axis_value,rmse_range_m,rmse_velocity_mps,
/// root_crlb_range_m,root_crlb_velocity_mps,fail_fraction,trials
void write_sweep_csv(const SweepResult& result, std::ostream& os);
/// Interleaved two-signal CSV with a leading `signal` column.
void write_compare_csv(const SweepResult& dmrs, const SweepResult& data,
                       std::ostream& os);
/// Run manifest: every parameter, the seeds, and the code version.
void write_manifest(const SweepSpec& spec, std::ostream& os);

/// Deterministic per-trial seed derivation (splitmix64 over the master
/// seed, sweep point index and trial index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point,
                          std::uint64_t trial);

} // namespace isac

#endif
