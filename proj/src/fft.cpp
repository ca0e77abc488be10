#include "mkdvb/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mkdvb::fft {

namespace {

std::mutex plan_mutex;

fftw_plan get_plan_1d(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(n);
    fftw_plan p = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(scratch.data()),
        reinterpret_cast<fftw_complex*>(scratch.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

fftw_plan get_plan_2d(int nt, int nx, int sign) {
    static std::map<std::tuple<int, int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(nt, nx, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(static_cast<size_t>(nt) * nx);
    fftw_plan p = fftw_plan_dft_2d(
        nt, nx, reinterpret_cast<fftw_complex*>(scratch.data()),
        reinterpret_cast<fftw_complex*>(scratch.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, p);
    return p;
}

} // namespace

void dft_forward(std::vector<std::complex<double>>& data) {
    if (data.empty()) throw std::invalid_argument("dft_forward: empty input");
    fftw_plan p = get_plan_1d(static_cast<int>(data.size()), FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

void dft_backward(std::vector<std::complex<double>>& data) {
    if (data.empty()) throw std::invalid_argument("dft_backward: empty input");
    fftw_plan p = get_plan_1d(static_cast<int>(data.size()), FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

void dft2_forward(std::vector<std::complex<double>>& data, int nt, int nx) {
    if (data.size() != static_cast<size_t>(nt) * nx)
        throw std::invalid_argument("dft2_forward: shape mismatch");
    fftw_plan p = get_plan_2d(nt, nx, FFTW_FORWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

void dft2_backward(std::vector<std::complex<double>>& data, int nt, int nx) {
    if (data.size() != static_cast<size_t>(nt) * nx)
        throw std::invalid_argument("dft2_backward: shape mismatch");
    fftw_plan p = get_plan_2d(nt, nx, FFTW_BACKWARD);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data.data()),
                     reinterpret_cast<fftw_complex*>(data.data()));
}

} // namespace mkdvb::fft
