#ifndef ISAC_FFT_HPP
#define ISAC_FFT_HPP

#include <vector>

#include "isac/types.hpp"

namespace isac {

/// Unitary DFT, out-of-place, any length. Plans are cached per
/// (length, direction); planning is serialized, execution is thread-safe.
std::vector<cd> fft_unitary(const std::vector<cd>& in);
std::vector<cd> ifft_unitary(const std::vector<cd>& in);

} // namespace isac

#endif
