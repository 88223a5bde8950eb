#ifndef ISAC_OFDM_HPP
#define ISAC_OFDM_HPP

#include <iosfwd>
#include <vector>

#include "isac/types.hpp"

namespace isac {

/// Time-domain sample stream: m_symbols blocks of (n_ifft + n_cp) samples.
struct SampleStream {
    std::vector<cd> samples;
    double sample_interval = 0.0;
    std::vector<std::size_t> symbol_boundaries; // start of each CP block
    int n_ifft = 0;
    int n_cp = 0;
};

/// Per-symbol unitary IFFT over n_ifft points (grid zero-padded above
/// n_subcarriers) with the last n_cp samples prepended as cyclic prefix.
SampleStream modulate(const ResourceGrid& grid, const OfdmParams& params);

/// Inverse of modulate: drop CP, unitary FFT, keep the first n_subcarriers
/// bins. Every returned cell is flagged occupied; callers extract DMRS
/// positions against a reference grid.
ResourceGrid demodulate(const SampleStream& stream, const OfdmParams& params);

/// Raw dump: 16-byte header (magic "ISAC", n_ifft, n_cp, m_symbols as
/// uint32) followed by interleaved float64 re/im.
void write_stream_bin(const SampleStream& stream, int m_symbols,
                      std::ostream& os);

} // namespace isac

#endif
