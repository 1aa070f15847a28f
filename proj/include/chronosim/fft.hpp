#pragma once

#include <complex>
#include <vector>

namespace chronosim::fft {

// In-place N-dimensional DFT of a row-major complex array with the given axis
// sizes. `backward` applies the 1/size normalization, so backward(forward(x))
// returns x. Plans are FFTW_ESTIMATE and cached per shape; plan creation is
// serialized internally, execution is safe from concurrent threads.
void forward(std::vector<std::complex<double>>& data, const std::vector<int>& dims);
void backward(std::vector<std::complex<double>>& data, const std::vector<int>& dims);

// Angular wavenumbers of an n-point periodic axis with spacing dx, in FFT
// output order: k_j = 2 pi j / (n dx) for j < n/2, then the negative branch.
std::vector<double> wavenumbers(int n, double dx);

}  // namespace chronosim::fft
