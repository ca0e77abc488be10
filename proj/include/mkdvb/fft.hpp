#ifndef MKDVB_FFT_HPP
#define MKDVB_FFT_HPP

#include <complex>
#include <vector>

namespace mkdvb::fft {

// In-order complex DFT wrappers around FFTW with a per-size plan cache.
// Sign convention: dft_forward applies sum_n x_n exp(-2*pi*i*n*m/N).
void dft_forward(std::vector<std::complex<double>>& data);
void dft_backward(std::vector<std::complex<double>>& data);

// 2-D transforms on row-major data of shape (nt, nx); the time index is
// the slow axis.
void dft2_forward(std::vector<std::complex<double>>& data, int nt, int nx);
void dft2_backward(std::vector<std::complex<double>>& data, int nt, int nx);

} // namespace mkdvb::fft

#endif
