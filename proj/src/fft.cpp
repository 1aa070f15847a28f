#include "chronosim/fft.hpp"

#include <fftw3.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace chronosim::fft {
namespace {

std::size_t total_size(const std::vector<int>& dims) {
    std::size_t s = 1;
    for (int n : dims) {
        if (n < 1) throw std::invalid_argument("fft: axis size must be >= 1");
        s *= static_cast<std::size_t>(n);
    }
    return s;
}

// One cached in-place plan per (dims, sign). FFTW_UNALIGNED lets the plan run
// on any caller buffer via the new-array interface. Plans live for the
// process; creation is not thread-safe in FFTW and is guarded here.
fftw_plan plan_for(const std::vector<int>& dims, int sign) {
    static std::mutex mutex;
    static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(dims, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t n = total_size(dims);
    fftw_complex* scratch = fftw_alloc_complex(n);
    if (!scratch) throw std::bad_alloc();
    fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), scratch, scratch,
                                   sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(scratch);
    if (!plan) throw std::runtime_error("fft: plan creation failed");
    cache.emplace(std::move(key), plan);
    return plan;
}

void execute(std::vector<std::complex<double>>& data, const std::vector<int>& dims, int sign) {
    if (data.size() != total_size(dims))
        throw std::invalid_argument("fft: data length does not match dims");
    fftw_plan plan = plan_for(dims, sign);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
}

}  // namespace

void forward(std::vector<std::complex<double>>& data, const std::vector<int>& dims) {
    execute(data, dims, FFTW_FORWARD);
}

void backward(std::vector<std::complex<double>>& data, const std::vector<int>& dims) {
    execute(data, dims, FFTW_BACKWARD);
    const double scale = 1.0 / static_cast<double>(data.size());
    for (auto& v : data) v *= scale;
}

std::vector<double> wavenumbers(int n, double dx) {
    if (n < 1 || !(dx > 0.0)) throw std::invalid_argument("fft: bad axis spec");
    std::vector<double> k(static_cast<std::size_t>(n));
    const double dk = 2.0 * std::numbers::pi / (n * dx);
    for (int j = 0; j < n; ++j) {
        const int f = (j < (n + 1) / 2) ? j : j - n;
        k[static_cast<std::size_t>(j)] = f * dk;
    }
    return k;
}

}  // namespace chronosim::fft
