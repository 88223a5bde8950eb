#include "isac/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace isac {

namespace {

std::mutex g_plan_mutex;
std::map<std::pair<std::size_t, int>, fftw_plan> g_plans;

fftw_plan plan_for(std::size_t n, int sign) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = g_plans.find(key);
    if (it != g_plans.end()) return it->second;
    std::vector<cd> scratch_in(n), scratch_out(n);
    fftw_plan plan = fftw_plan_dft_1d(
        static_cast<int>(n),
        reinterpret_cast<fftw_complex*>(scratch_in.data()),
        reinterpret_cast<fftw_complex*>(scratch_out.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    g_plans.emplace(key, plan);
    return plan;
}

std::vector<cd> transform(const std::vector<cd>& in, int sign) {
    const std::size_t n = in.size();
    if (n == 0) return {};
    std::vector<cd> out(n);
    // fftw_execute_dft on fresh arrays is thread-safe once the plan exists.
    fftw_execute_dft(plan_for(n, sign),
                     reinterpret_cast<fftw_complex*>(
                         const_cast<cd*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& v : out) v *= scale;
    return out;
}

} // namespace

std::vector<cd> fft_unitary(const std::vector<cd>& in) {
    return transform(in, FFTW_FORWARD);
}

std::vector<cd> ifft_unitary(const std::vector<cd>& in) {
    return transform(in, FFTW_BACKWARD);
}

} // namespace isac
