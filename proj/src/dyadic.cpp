#include "mkdvb/dyadic.hpp"

#include "mkdvb/errors.hpp"

#include <cmath>

namespace mkdvb {

namespace {

double mollifier(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

// Smooth step: 0 for s <= 0, 1 for s >= 1.
double smooth_step(double s) {
    double a = mollifier(s);
    double b = mollifier(1.0 - s);
    return a / (a + b);
}

// Even bump equal to 1 on [-inner, inner], supported in [-outer, outer].
double bump(double x, double inner, double outer) {
    double a = std::abs(x);
    if (a <= inner) return 1.0;
    if (a >= outer) return 0.0;
    return smooth_step((outer - a) / (outer - inner));
}

} // namespace

double eta0(double xi) { return bump(xi, 1.25, 1.6); }

double eta_k(int k, double xi) {
    if (k < 0) throw ParameterError("eta_k: k must be non-negative");
    if (k == 0) return eta0(xi);
    return eta0(xi / std::exp2(k)) - eta0(xi / std::exp2(k - 1));
}

double chi_k(int k, double xi) {
    return eta0(xi / std::exp2(k)) - eta0(xi / std::exp2(k - 1));
}

double psi_window(double t) { return bump(t, 1.0, 2.0); }

SpectralField project_Pk(const SpectralField& s, int k) {
    if (k < 0) throw ParameterError("project_Pk: k must be non-negative");
    SpectralField out{s.grid, s.coeff};
    for (int idx = 0; idx < s.grid.n; ++idx) out.coeff[idx] *= chi_k(k, s.grid.xi(idx));
    out.coeff[s.grid.nyquist_index()] = 0.0;
    return out;
}

} // namespace mkdvb
