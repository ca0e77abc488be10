#include "mkdvb/grid.hpp"

#include "mkdvb/errors.hpp"
#include "mkdvb/fft.hpp"

#include <algorithm>
#include <cmath>

namespace mkdvb {

PeriodicGrid make_grid(double length, int n) {
    if (!(length > 0.0)) throw ParameterError("make_grid: length must be positive");
    if (n < 8 || n % 2 != 0) throw ParameterError("make_grid: N must be even and >= 8");
    return PeriodicGrid{length, n};
}

RealField make_field(const PeriodicGrid& grid, const std::function<double(double)>& f) {
    RealField u{grid, std::vector<double>(grid.n)};
    for (int i = 0; i < grid.n; ++i) u.samples[i] = f(grid.x(i));
    return u;
}

RealField zero_field(const PeriodicGrid& grid) {
    return RealField{grid, std::vector<double>(grid.n, 0.0)};
}

SpectralField forward_transform(const RealField& u) {
    const int n = u.grid.n;
    if (static_cast<int>(u.samples.size()) != n)
        throw DataError("forward_transform: sample count does not match grid");
    for (double v : u.samples)
        if (!std::isfinite(v)) throw DataError("forward_transform: non-finite sample");

    std::vector<std::complex<double>> buf(u.samples.begin(), u.samples.end());
    fft::dft_forward(buf);
    // x_i = -L/2 + i*dx shifts the DFT by the phase (-1)^m.
    const double dx = u.grid.dx();
    for (int idx = 0; idx < n; ++idx) {
        double sign = (idx % 2 == 0) ? 1.0 : -1.0;
        buf[idx] *= sign * dx;
    }
    buf[u.grid.nyquist_index()] = 0.0;
    return SpectralField{u.grid, std::move(buf)};
}

RealField inverse_transform(const SpectralField& s) {
    const int n = s.grid.n;
    if (static_cast<int>(s.coeff.size()) != n)
        throw DataError("inverse_transform: coefficient count does not match grid");

    // Measure Hermitian asymmetry, then symmetrize.
    double asym = 0.0, scale = 0.0;
    std::vector<std::complex<double>> sym(n);
    sym[0] = {s.coeff[0].real(), 0.0};
    asym = std::abs(s.coeff[0].imag());
    scale = std::abs(s.coeff[0]);
    sym[n / 2] = 0.0;
    for (int idx = 1; idx < n / 2; ++idx) {
        auto a = s.coeff[idx];
        auto b = s.coeff[n - idx];
        auto avg = 0.5 * (a + std::conj(b));
        sym[idx] = avg;
        sym[n - idx] = std::conj(avg);
        asym = std::max(asym, std::abs(a - std::conj(b)));
        scale = std::max({scale, std::abs(a), std::abs(b)});
    }
    if (scale > 0.0 && asym > 1e-6 * scale)
        throw DataError("inverse_transform: spectrum is grossly non-Hermitian");

    for (int idx = 0; idx < n; ++idx) {
        double sign = (idx % 2 == 0) ? 1.0 : -1.0;
        sym[idx] *= sign;
    }
    fft::dft_backward(sym);
    RealField u{s.grid, std::vector<double>(n)};
    const double inv_l = 1.0 / s.grid.length;
    for (int i = 0; i < n; ++i) u.samples[i] = sym[i].real() * inv_l;
    return u;
}

SpectralField apply_multiplier(const SpectralField& s, const MultiplierSymbol& m) {
    SpectralField out{s.grid, s.coeff};
    const int n = s.grid.n;
    for (int idx = 0; idx < n; ++idx) {
        auto v = m.fn(s.grid.xi(idx));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DataError("apply_multiplier: symbol '" + m.name + "' not finite on lattice");
        out.coeff[idx] *= v;
    }
    out.coeff[s.grid.nyquist_index()] = 0.0;
    return out;
}

double fractional_power(double xi, double two_alpha) {
    double a = std::abs(xi);
    if (a == 0.0) return 0.0;
    return std::exp(two_alpha * std::log(a));
}

MultiplierSymbol airy_symbol(double t) {
    return {"airy", [t](double xi) {
                return std::exp(std::complex<double>(0.0, xi * xi * xi * t));
            }};
}

MultiplierSymbol dissipative_symbol(double t, double eps, double alpha) {
    if (eps < 0.0 || eps > 1.0) throw ParameterError("dissipative_symbol: eps must be in [0,1]");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw ParameterError("dissipative_symbol: alpha must be in (0,1]");
    return {"dissipative", [t, eps, alpha](double xi) {
                double damp = -eps * fractional_power(xi, 2.0 * alpha) * std::abs(t);
                return std::exp(std::complex<double>(damp, xi * xi * xi * t));
            }};
}

MultiplierSymbol derivative_symbol() {
    return {"derivative", [](double xi) { return std::complex<double>(0.0, xi); }};
}

MultiplierSymbol fractional_derivative_symbol(double sigma) {
    return {"fractional-derivative", [sigma](double xi) {
                return std::complex<double>(fractional_power(xi, sigma), 0.0);
            }};
}

SpectralField airy_evolve(const SpectralField& s, double t) {
    return apply_multiplier(s, airy_symbol(t));
}

SpectralField dissipative_evolve(const SpectralField& s, double t, double eps, double alpha) {
    return apply_multiplier(s, dissipative_symbol(t, eps, alpha));
}

double sobolev_norm(const SpectralField& s, double sigma) {
    if (sigma < -2.0 || sigma > 4.0)
        throw ParameterError("sobolev_norm: sigma outside supported range [-2,4]");
    double acc = 0.0;
    for (int idx = 0; idx < s.grid.n; ++idx) {
        double xi = s.grid.xi(idx);
        double w = std::pow(1.0 + xi * xi, sigma);
        acc += w * std::norm(s.coeff[idx]);
    }
    return std::sqrt(acc / s.grid.length);
}

double homogeneous_seminorm(const SpectralField& s, double sigma) {
    if (sigma < 0.0 || sigma > 4.0)
        throw ParameterError("homogeneous_seminorm: sigma outside supported range [0,4]");
    double acc = 0.0;
    for (int idx = 0; idx < s.grid.n; ++idx) {
        double xi = s.grid.xi(idx);
        if (xi == 0.0) continue;
        acc += fractional_power(xi, 2.0 * sigma) * std::norm(s.coeff[idx]);
    }
    return std::sqrt(acc / s.grid.length);
}

double l2_norm(const RealField& u) {
    double acc = 0.0;
    for (double v : u.samples) acc += v * v;
    return std::sqrt(acc * u.grid.dx());
}

} // namespace mkdvb
