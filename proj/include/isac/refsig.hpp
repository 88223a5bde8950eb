#ifndef ISAC_REFSIG_HPP
#define ISAC_REFSIG_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "isac/types.hpp"

namespace isac {

/// Length-31 two-register Gold sequence, NR convention: the first register
/// is fixed-initialized to 1, the second takes the seed, both are advanced
/// 1600 steps before output. Taps: x1(n+31) = x1(n+3) + x1(n),
/// x2(n+31) = x2(n+3) + x2(n+2) + x2(n+1) + x2(n), all mod 2.
std::vector<std::uint8_t> gold_sequence(std::uint64_t seed, std::size_t length);

/// Pairs of bits to unit-magnitude QPSK:
/// symbol n = ((1 - 2 b(2n)) + j (1 - 2 b(2n+1))) / sqrt(2).
std::vector<cd> qpsk_map(std::span<const std::uint8_t> bits);

/// DMRS grid: QPSK-mapped Gold symbols at (k, m) for m in symbol_positions
/// and k = carrier_offset (mod comb_carrier). One sequence per DMRS symbol,
/// seeded with cfg.seed + symbol index.
ResourceGrid build_dmrs_grid(const OfdmParams& params, const DmrsConfig& cfg);

/// Comparison baseline: independent random QPSK on every resource element.
ResourceGrid build_data_grid(const OfdmParams& params, std::uint64_t seed);

/// CSV dump, header "k,m,re,im,occupied", rows ordered by (m, k).
void write_grid_csv(const ResourceGrid& grid, std::ostream& os);

} // namespace isac

#endif
