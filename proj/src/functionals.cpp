#include "mkdvb/functionals.hpp"

#include "mkdvb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mkdvb {

namespace {

// 2x spectral upsampling; keeps diagnostics of quartic/sextic powers
// clear of aliasing well beyond solver accuracy.
RealField upsample2(const RealField& u) {
    SpectralField s = forward_transform(u);
    const int n = u.grid.n;
    PeriodicGrid g2 = make_grid(u.grid.length, 2 * n);
    SpectralField s2{g2, std::vector<std::complex<double>>(2 * n, 0.0)};
    for (int idx = 0; idx < n; ++idx) {
        int m = u.grid.mode(idx);
        if (m == -n / 2) continue;
        int idx2 = m >= 0 ? m : m + 2 * n;
        s2.coeff[idx2] = s.coeff[idx];
    }
    return inverse_transform(s2);
}

double integral_power(const RealField& u, int p) {
    RealField fine = upsample2(u);
    double acc = 0.0;
    for (double v : fine.samples) acc += std::pow(v, p);
    return acc * fine.grid.dx();
}

RealField spectral_derivative(const RealField& u) {
    return inverse_transform(apply_multiplier(forward_transform(u), derivative_symbol()));
}

} // namespace

double h1_mkdv(const RealField& u) {
    SpectralField s = forward_transform(u);
    double ux2 = std::pow(homogeneous_seminorm(s, 1.0), 2);
    double u2 = std::pow(sobolev_norm(s, 0.0), 2);
    return ux2 + integral_power(u, 4) + u2;
}

double h1_kdv(const RealField& u) {
    SpectralField s = forward_transform(u);
    double ux2 = std::pow(homogeneous_seminorm(s, 1.0), 2);
    return ux2 + 2.0 * integral_power(u, 3);
}

double h2_mkdv(const RealField& u) {
    SpectralField s = forward_transform(u);
    double uxx2 = std::pow(homogeneous_seminorm(s, 2.0), 2);
    RealField ux = spectral_derivative(u);
    RealField uf = upsample2(u);
    RealField uxf = upsample2(ux);
    double mixed = 0.0;
    for (size_t i = 0; i < uf.samples.size(); ++i) {
        double a = uf.samples[i], b = uxf.samples[i];
        mixed += a * a * b * b;
    }
    mixed *= uf.grid.dx();
    return uxx2 + 10.0 * mixed + 2.0 * integral_power(u, 6);
}

double h2p_mkdv(const RealField& u) {
    return h2_mkdv(u) + std::pow(l2_norm(u), 2);
}

FunctionalReport functional_along(const Trajectory& traj, const std::string& name,
                                  double (*fn)(const RealField&)) {
    FunctionalReport r;
    r.name = name;
    for (const auto& f : traj.fields) r.values.push_back(fn(f));
    if (!r.values.empty()) {
        double v0 = r.values.front();
        for (double v : r.values)
            r.drift = std::max(r.drift, std::abs(v - v0) / (1.0 + std::abs(v0)));
    }
    return r;
}

double dissipation_budget(const Trajectory& traj, double sigma) {
    const std::vector<double>* samples = nullptr;
    for (const auto& [key, vec] : traj.dissipation_samples)
        if (std::abs(key - sigma) < 1e-12) samples = &vec;
    if (!samples)
        throw DiagnosticError("dissipation_budget: no samples recorded at this order");
    if (samples->size() != traj.step_times.size())
        throw DiagnosticError("dissipation_budget: sample/time length mismatch");
    double integral = 0.0;
    for (size_t i = 0; i + 1 < samples->size(); ++i) {
        double h = traj.step_times[i + 1] - traj.step_times[i];
        integral += 0.5 * h * ((*samples)[i] + (*samples)[i + 1]);
    }
    return std::sqrt(traj.equation.eps) * std::sqrt(integral);
}

GnRatios gn_ratios(const RealField& u) {
    double mass = l2_norm(u);
    if (mass == 0.0) throw DiagnosticError("gn_ratios: undefined for the zero field");
    SpectralField s = forward_transform(u);
    double ux = homogeneous_seminorm(s, 1.0);
    GnRatios r;
    r.r6 = integral_power(u, 6) / (std::pow(mass, 4) * ux * ux);
    r.r4 = integral_power(u, 4) / (std::pow(mass, 3) * ux);
    return r;
}

RealField miura_transform(const RealField& v) {
    SpectralField s = forward_transform(v);
    RealField vx = inverse_transform(apply_multiplier(s, derivative_symbol()));
    // Square formed after a 2/3-rule truncation of v.
    SpectralField trunc = s;
    int cutoff = static_cast<int>((2.0 / 3.0) * (v.grid.n / 2));
    for (int idx = 0; idx < v.grid.n; ++idx)
        if (std::abs(v.grid.mode(idx)) > cutoff) trunc.coeff[idx] = 0.0;
    RealField vt = inverse_transform(trunc);
    RealField out = vx;
    for (int i = 0; i < v.grid.n; ++i) out.samples[i] += vt.samples[i] * vt.samples[i];
    return out;
}

double miura_consistency(const Trajectory& traj) {
    if (traj.fields.size() < 3)
        throw DiagnosticError("miura_consistency: need at least 3 snapshots");
    std::vector<RealField> m;
    m.reserve(traj.fields.size());
    for (const auto& f : traj.fields) m.push_back(miura_transform(f));

    const PeriodicGrid& g = traj.fields.front().grid;
    MultiplierSymbol d3{"third-derivative", [](double xi) {
                            return std::complex<double>(0.0, -xi * xi * xi);
                        }};
    double worst = 0.0;
    for (size_t k = 1; k + 1 < m.size(); ++k) {
        double h_prev = traj.times[k] - traj.times[k - 1];
        double h_next = traj.times[k + 1] - traj.times[k];
        if (std::abs(h_prev - h_next) > 1e-9 * h_next)
            throw DiagnosticError("miura_consistency: snapshots are not uniformly spaced");
        SpectralField sk = forward_transform(m[k]);
        RealField mxxx = inverse_transform(apply_multiplier(sk, d3));
        // 3((Mv)^2)_x with the square dealiased by the 2/3 rule.
        SpectralField trunc = sk;
        int cutoff = static_cast<int>((2.0 / 3.0) * (g.n / 2));
        for (int idx = 0; idx < g.n; ++idx)
            if (std::abs(g.mode(idx)) > cutoff) trunc.coeff[idx] = 0.0;
        RealField mt = inverse_transform(trunc);
        for (double& v : mt.samples) v *= v;
        RealField flux = inverse_transform(
            apply_multiplier(forward_transform(mt), derivative_symbol()));

        RealField residual = m[k];
        for (int i = 0; i < g.n; ++i)
            residual.samples[i] =
                (m[k + 1].samples[i] - m[k - 1].samples[i]) / (h_prev + h_next) +
                mxxx.samples[i] - 3.0 * flux.samples[i];
        worst = std::max(worst, l2_norm(residual));
    }
    return worst;
}

} // namespace mkdvb
