#ifndef ISAC_CONFIG_HPP
#define ISAC_CONFIG_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "isac/bench.hpp"
#include "isac/types.hpp"

namespace isac {

/// Flat key=value run configuration ('#' starts a comment, blank lines
/// ignored). Unknown keys are rejected. All physical quantities are SI
/// base units; snr_db is the one dB-valued key.
struct RunConfig {
    std::map<std::string, std::string> entries;

    static RunConfig parse(std::istream& is);
    static RunConfig parse_file(const std::string& path);

    /// Materializes the full sweep spec (params, DMRS config, target,
    /// estimator options, trial plan) with Table II defaults for every
    /// key that is absent.
    SweepSpec to_spec() const;

    bool has(const std::string& key) const { return entries.count(key) != 0; }
};

} // namespace isac

#endif
