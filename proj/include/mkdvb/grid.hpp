#ifndef MKDVB_GRID_HPP
#define MKDVB_GRID_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace mkdvb {

/// Uniform periodic grid on [-L/2, L/2) with an even number of points.
///
/// Spectral storage follows DFT order: index idx holds the signed mode
/// m = idx for idx < N/2 and m = idx - N otherwise, with frequency
/// xi_m = 2*pi*m/L. The unpaired Nyquist mode m = -N/2 is always kept at
/// zero for real fields.
struct PeriodicGrid {
    double length = 0.0;
    int n = 0;

    double dx() const { return length / n; }
    double x(int i) const { return -0.5 * length + i * dx(); }
    int mode(int idx) const { return idx < n / 2 ? idx : idx - n; }
    double xi(int idx) const { return 2.0 * M_PI * mode(idx) / length; }
    int nyquist_index() const { return n / 2; }

    bool operator==(const PeriodicGrid&) const = default;
};

PeriodicGrid make_grid(double length, int n);

/// Real-valued profile u(x_i) on a PeriodicGrid.
struct RealField {
    PeriodicGrid grid;
    std::vector<double> samples;
};

/// Fourier coefficients under the convention
///   u_hat(xi_m) = dx * sum_i u(x_i) exp(-i x_i xi_m),
/// so that Parseval reads sum |u|^2 dx = (1/L) sum |u_hat|^2.
struct SpectralField {
    PeriodicGrid grid;
    std::vector<std::complex<double>> coeff;
};

/// Lazily evaluated Fourier multiplier m(xi) with a diagnostic name.
struct MultiplierSymbol {
    std::string name;
    std::function<std::complex<double>(double)> fn;
};

RealField make_field(const PeriodicGrid& grid, const std::function<double(double)>& f);
RealField zero_field(const PeriodicGrid& grid);

SpectralField forward_transform(const RealField& u);
RealField inverse_transform(const SpectralField& s);

SpectralField apply_multiplier(const SpectralField& s, const MultiplierSymbol& m);

// |xi|^(2*alpha) evaluated as exp(2*alpha*log|xi|); zero at xi = 0.
double fractional_power(double xi, double two_alpha);

MultiplierSymbol airy_symbol(double t);
MultiplierSymbol dissipative_symbol(double t, double eps, double alpha);
MultiplierSymbol derivative_symbol();                 // i*xi
MultiplierSymbol fractional_derivative_symbol(double sigma); // |xi|^sigma

SpectralField airy_evolve(const SpectralField& s, double t);
SpectralField dissipative_evolve(const SpectralField& s, double t, double eps, double alpha);

/// H^sigma norm, ((1/L) sum <xi>^(2 sigma) |u_hat|^2)^(1/2); sigma in [-2, 4].
double sobolev_norm(const SpectralField& s, double sigma);
/// Homogeneous seminorm with weight |xi|^(2 sigma); sigma in [0, 4].
double homogeneous_seminorm(const SpectralField& s, double sigma);

double l2_norm(const RealField& u);

} // namespace mkdvb

#endif
