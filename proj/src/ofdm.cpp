#include "isac/ofdm.hpp"

#include <cstring>
#include <ostream>

#include "isac/fft.hpp"

namespace isac {

SampleStream modulate(const ResourceGrid& grid, const OfdmParams& params) {
    if (grid.n_subcarriers != params.n_subcarriers ||
        grid.m_symbols != params.m_symbols)
        throw ShapeError("modulate: grid dimensions do not match params");
    if (params.n_ifft < params.n_subcarriers)
        throw ConfigError("modulate: n_ifft smaller than n_subcarriers");

    const int n_ifft = params.n_ifft;
    const int n_cp = params.n_cp_samples();
    const int stride = n_ifft + n_cp;

    SampleStream out;
    out.sample_interval = params.sample_interval;
    out.n_ifft = n_ifft;
    out.n_cp = n_cp;
    out.samples.resize(static_cast<std::size_t>(stride) * params.m_symbols);
    out.symbol_boundaries.reserve(params.m_symbols);

    std::vector<cd> column(n_ifft);
    for (int m = 0; m < params.m_symbols; ++m) {
        std::fill(column.begin(), column.end(), cd{0.0, 0.0});
        for (int k = 0; k < params.n_subcarriers; ++k)
            column[k] = grid.at(k, m);
        auto time = ifft_unitary(column);

        const std::size_t base = static_cast<std::size_t>(m) * stride;
        out.symbol_boundaries.push_back(base);
        for (int i = 0; i < n_cp; ++i)
            out.samples[base + i] = time[n_ifft - n_cp + i];
        std::copy(time.begin(), time.end(), out.samples.begin() + base + n_cp);
    }
    return out;
}

ResourceGrid demodulate(const SampleStream& stream, const OfdmParams& params) {
    const int n_ifft = params.n_ifft;
    const int n_cp = params.n_cp_samples();
    const int stride = n_ifft + n_cp;
    if (stream.samples.size() !=
        static_cast<std::size_t>(stride) * params.m_symbols)
        throw ShapeError("demodulate: stream length does not match params");

    ResourceGrid grid(params.n_subcarriers, params.m_symbols);
    std::vector<cd> window(n_ifft);
    for (int m = 0; m < params.m_symbols; ++m) {
        const std::size_t base = static_cast<std::size_t>(m) * stride + n_cp;
        std::copy(stream.samples.begin() + base,
                  stream.samples.begin() + base + n_ifft, window.begin());
        auto freq = fft_unitary(window);
        for (int k = 0; k < params.n_subcarriers; ++k)
            grid.set(k, m, freq[k]);
    }
    return grid;
}

void write_stream_bin(const SampleStream& stream, int m_symbols,
                      std::ostream& os) {
    char header[16] = {'I', 'S', 'A', 'C'};
    auto put_u32 = [&](int offset, std::uint32_t v) {
        std::memcpy(header + offset, &v, sizeof v);
    };
    put_u32(4, static_cast<std::uint32_t>(stream.n_ifft));
    put_u32(8, static_cast<std::uint32_t>(stream.n_cp));
    put_u32(12, static_cast<std::uint32_t>(m_symbols));
    os.write(header, sizeof header);
    for (const cd& s : stream.samples) {
        double re = s.real(), im = s.imag();
        os.write(reinterpret_cast<const char*>(&re), sizeof re);
        os.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

} // namespace isac
