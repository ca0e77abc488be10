#include "mkdvb/profiles.hpp"

#include "mkdvb/errors.hpp"

#include <cmath>
#include <random>

namespace mkdvb {

RealField make_profile(const PeriodicGrid& grid, const DataSpec& spec) {
    if (spec.profile == "gaussian") {
        if (!(spec.width > 0.0)) throw ParameterError("gaussian: width must be positive");
        double a = spec.amplitude, w = spec.width;
        return make_field(grid, [a, w](double x) { return a * std::exp(-x * x / (2.0 * w * w)); });
    }
    if (spec.profile == "sech") {
        if (!(spec.width > 0.0)) throw ParameterError("sech: width must be positive");
        double a = spec.amplitude, w = spec.width;
        return make_field(grid, [a, w](double x) { return a / std::cosh(x / w); });
    }
    if (spec.profile == "cosine") {
        double a = spec.amplitude;
        double kx = 2.0 * M_PI * spec.mode / grid.length;
        return make_field(grid, [a, kx](double x) { return a * std::cos(kx * x); });
    }
    if (spec.profile == "random-bandlimited") {
        if (spec.band < 1 || spec.band >= grid.n / 2)
            throw ParameterError("random-bandlimited: band must be in [1, N/2)");
        std::mt19937_64 rng(spec.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        SpectralField s{grid, std::vector<std::complex<double>>(grid.n, 0.0)};
        for (int m = 1; m <= spec.band; ++m) {
            std::complex<double> c(gauss(rng), gauss(rng));
            s.coeff[m] = c;
            s.coeff[grid.n - m] = std::conj(c);
        }
        RealField u = inverse_transform(s);
        double norm = l2_norm(u);
        if (norm > 0.0)
            for (double& v : u.samples) v *= spec.amplitude / norm;
        return u;
    }
    throw ParameterError("unknown data profile: " + spec.profile);
}

} // namespace mkdvb
