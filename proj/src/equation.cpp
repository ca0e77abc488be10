#include "mkdvb/equation.hpp"

#include "mkdvb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mkdvb {

std::string family_name(Family f) {
    switch (f) {
        case Family::KDV: return "kdv";
        case Family::KDV_B: return "kdv-b";
        case Family::MKDV: return "mkdv";
        case Family::MKDV_B: return "mkdv-b";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "kdv") return Family::KDV;
    if (name == "kdv-b" || name == "kdvb") return Family::KDV_B;
    if (name == "mkdv") return Family::MKDV;
    if (name == "mkdv-b" || name == "mkdvb") return Family::MKDV_B;
    throw ParameterError("unknown equation family: " + name);
}

bool is_dissipative(Family f) { return f == Family::KDV_B || f == Family::MKDV_B; }
bool is_cubic(Family f) { return f == Family::MKDV || f == Family::MKDV_B; }

EquationSpec EquationSpec::make(Family family, double eps, double alpha) {
    if (is_dissipative(family)) {
        if (!(eps > 0.0) || eps > 1.0)
            throw ParameterError("dissipative family requires eps in (0,1]");
        if (!(alpha > 0.0) || alpha > 1.0)
            throw ParameterError("alpha must be in (0,1]");
        return EquationSpec{family, eps, alpha};
    }
    if (eps != 0.0)
        throw ParameterError("non-dissipative family requires eps = 0");
    return EquationSpec{family, 0.0, 1.0};
}

double SolverConfig::effective_dealias(Family f) const {
    if (dealias_fraction > 0.0) return dealias_fraction;
    return is_cubic(f) ? 0.5 : 2.0 / 3.0;
}

double SolverConfig::default_dt(const RealField& u) const {
    double umax = 0.0;
    for (double v : u.samples) umax = std::max(umax, std::abs(v));
    double d = u.grid.dx();
    return 0.5 * d / ((1.0 + umax) * (1.0 + umax));
}

namespace {

void dealias(SpectralField& s, double fraction) {
    int cutoff = static_cast<int>(fraction * (s.grid.n / 2));
    if (cutoff < 4) throw ParameterError("dealias: fewer than 4 retained modes");
    for (int idx = 0; idx < s.grid.n; ++idx)
        if (std::abs(s.grid.mode(idx)) > cutoff) s.coeff[idx] = 0.0;
    s.coeff[s.grid.nyquist_index()] = 0.0;
}

// Spectral N(u): c * i xi * F[(P u)^p], with P the sharp dealias projector.
SpectralField nonlinear_rhs_spectral(const SpectralField& s, const EquationSpec& eq,
                                     double fraction) {
    int power = is_cubic(eq.family) ? 3 : 2;
    double c = (eq.family == Family::KDV) ? 3.0 : 2.0;

    SpectralField trunc = s;
    dealias(trunc, fraction);
    RealField w = inverse_transform(trunc);
    for (double& v : w.samples) {
        double p = v * v;
        v = (power == 3) ? p * v : p;
    }
    SpectralField out = forward_transform(w);
    for (int idx = 0; idx < out.grid.n; ++idx)
        out.coeff[idx] *= std::complex<double>(0.0, c * out.grid.xi(idx));
    dealias(out, fraction);
    return out;
}

struct Propagators {
    std::vector<std::complex<double>> full;  // exp(L dt)
    std::vector<std::complex<double>> half;  // exp(L dt/2)
};

// Linear symbol L(xi) = i xi^3 - eps |xi|^(2 alpha) under the e^{-ix xi}
// transform convention.
Propagators make_propagators(const PeriodicGrid& g, const EquationSpec& eq, double dt) {
    Propagators p;
    p.full.resize(g.n);
    p.half.resize(g.n);
    for (int idx = 0; idx < g.n; ++idx) {
        double xi = g.xi(idx);
        std::complex<double> lam(-eq.eps * fractional_power(xi, 2.0 * eq.alpha),
                                 xi * xi * xi);
        p.full[idx] = std::exp(lam * dt);
        p.half[idx] = std::exp(lam * (0.5 * dt));
    }
    p.full[g.nyquist_index()] = 0.0;
    p.half[g.nyquist_index()] = 0.0;
    return p;
}

void mul(std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
}

// One integrating-factor RK4 step of size dt on the spectral state.
SpectralField ifrk4_step(const SpectralField& v, const EquationSpec& eq, double dt,
                         double fraction, const Propagators& prop) {
    auto N = [&](const SpectralField& s) { return nonlinear_rhs_spectral(s, eq, fraction); };
    const int n = v.grid.n;

    SpectralField n1 = N(v);

    SpectralField v2{v.grid, v.coeff};
    for (int i = 0; i < n; ++i) v2.coeff[i] += 0.5 * dt * n1.coeff[i];
    mul(v2.coeff, prop.half);
    SpectralField n2 = N(v2);

    SpectralField v3{v.grid, v.coeff};
    mul(v3.coeff, prop.half);
    for (int i = 0; i < n; ++i) v3.coeff[i] += 0.5 * dt * n2.coeff[i];
    SpectralField n3 = N(v3);

    SpectralField v4{v.grid, v.coeff};
    mul(v4.coeff, prop.full);
    {
        auto tmp = n3.coeff;
        mul(tmp, prop.half);
        for (int i = 0; i < n; ++i) v4.coeff[i] += dt * tmp[i];
    }
    SpectralField n4 = N(v4);

    SpectralField out{v.grid, v.coeff};
    mul(out.coeff, prop.full);
    mul(n1.coeff, prop.full);
    mul(n2.coeff, prop.half);
    mul(n3.coeff, prop.half);
    for (int i = 0; i < n; ++i)
        out.coeff[i] += dt / 6.0 *
                        (n1.coeff[i] + 2.0 * n2.coeff[i] + 2.0 * n3.coeff[i] + n4.coeff[i]);
    return out;
}

double max_abs(const RealField& u) {
    double m = 0.0;
    for (double v : u.samples) m = std::max(m, std::abs(v));
    return m;
}

} // namespace

RealField nonlinear_rhs(const RealField& u, const EquationSpec& eq, double dealias_fraction) {
    double fraction =
        dealias_fraction > 0.0 ? dealias_fraction : (is_cubic(eq.family) ? 0.5 : 2.0 / 3.0);
    return inverse_transform(nonlinear_rhs_spectral(forward_transform(u), eq, fraction));
}

RealField step(const RealField& u, const EquationSpec& eq, const SolverConfig& cfg) {
    double dt = cfg.dt > 0.0 ? cfg.dt : cfg.default_dt(u);
    double fraction = cfg.effective_dealias(eq.family);
    auto prop = make_propagators(u.grid, eq, dt);
    SpectralField next = ifrk4_step(forward_transform(u), eq, dt, fraction, prop);
    RealField out = inverse_transform(next);
    if (!std::isfinite(max_abs(out)))
        throw BlowUpError("step: non-finite field after one step", dt);
    return out;
}

Trajectory evolve(const RealField& phi, const EquationSpec& eq, double T, const SolverConfig& cfg) {
    if (!(T > 0.0)) throw ParameterError("evolve: T must be positive");
    if (cfg.record_every < 1) throw ParameterError("evolve: record_every must be positive");
    double dt0 = cfg.dt > 0.0 ? cfg.dt : cfg.default_dt(phi);
    long n_steps = std::max(1L, std::lround(std::ceil(T / dt0 - 1e-12)));
    double dt = T / static_cast<double>(n_steps);
    double fraction = cfg.effective_dealias(eq.family);

    std::vector<double> orders = {eq.alpha, 2.0 * eq.alpha};
    if (cfg.order2_diagnostics) orders.push_back(2.0 * eq.alpha + 1.0);

    Trajectory traj;
    traj.equation = eq;
    auto prop = make_propagators(phi.grid, eq, dt);

    SpectralField state = forward_transform(phi);
    double initial_max = std::max(max_abs(phi), 1e-30);

    auto record_dissipation = [&](double t) {
        traj.step_times.push_back(t);
        for (double sig : orders)
            traj.dissipation_samples[sig].push_back(
                std::pow(homogeneous_seminorm(state, sig), 2));
    };

    traj.times.push_back(0.0);
    traj.fields.push_back(inverse_transform(state));
    record_dissipation(0.0);

    for (long k = 1; k <= n_steps; ++k) {
        state = ifrk4_step(state, eq, dt, fraction, prop);
        double t = dt * static_cast<double>(k);
        RealField u = inverse_transform(state);
        double m = max_abs(u);
        if (!std::isfinite(m) || m > 1e6 * initial_max) {
            // Abort with the partial trajectory left intact for post-mortem.
            throw BlowUpError("evolve: blow-up detected at t=" + std::to_string(t), t);
        }
        record_dissipation(t);
        if (k % cfg.record_every == 0 || k == n_steps) {
            traj.times.push_back(t);
            traj.fields.push_back(std::move(u));
        }
    }
    return traj;
}

double scaling_check(const RealField& phi, double lambda, double eps, double alpha, double T,
                     const SolverConfig& cfg, Family family) {
    if (!(lambda > 0.0) || lambda > 1.0)
        throw ParameterError("scaling_check: lambda must be in (0,1]");
    const PeriodicGrid& g = phi.grid;

    Family fam = eps > 0.0 ? family : (is_cubic(family) ? Family::MKDV : Family::KDV);
    EquationSpec eq_unit = EquationSpec::make(fam, eps, eps > 0.0 ? alpha : 1.0);
    Trajectory unit = evolve(phi, eq_unit, T, cfg);

    // The lambda grid keeps N points on length L/lambda, so scaled grid
    // point i maps exactly onto unit grid point i under x -> lambda x.
    PeriodicGrid g2 = make_grid(g.length / lambda, g.n);
    RealField phi2{g2, phi.samples};
    for (double& v : phi2.samples) v *= lambda;

    double eps2 = eps * std::pow(lambda, 3.0 - 2.0 * alpha);
    EquationSpec eq2 = EquationSpec::make(fam, eps2, eps > 0.0 ? alpha : 1.0);
    double l3 = lambda * lambda * lambda;
    SolverConfig cfg2 = cfg;
    if (cfg2.dt <= 0.0) cfg2.dt = cfg.default_dt(phi);
    cfg2.dt /= l3;
    Trajectory scaled = evolve(phi2, eq2, T / l3, cfg2);

    if (unit.times.size() != scaled.times.size())
        throw ParameterError("scaling_check: snapshot schedules do not match");

    double sup = 0.0;
    for (size_t k = 0; k < unit.times.size(); ++k) {
        double acc = 0.0;
        for (int i = 0; i < g.n; ++i) {
            double d = scaled.fields[k].samples[i] - lambda * unit.fields[k].samples[i];
            acc += d * d;
        }
        sup = std::max(sup, std::sqrt(acc * g2.dx()));
    }
    return sup;
}

SweepReport inviscid_limit_sweep(const RealField& phi, const std::vector<double>& eps_list,
                                 double alpha, double s, double T, const SolverConfig& cfg) {
    if (eps_list.size() < 4)
        throw ParameterError("inviscid_limit_sweep: need at least 4 epsilon values");
    for (double e : eps_list)
        if (!(e > 0.0) || e > 1.0)
            throw ParameterError("inviscid_limit_sweep: eps values must be in (0,1]");
    double emax = *std::max_element(eps_list.begin(), eps_list.end());
    double emin = *std::min_element(eps_list.begin(), eps_list.end());
    if (emax / emin < 100.0)
        throw ParameterError("inviscid_limit_sweep: eps values must span >= 2 decades");
    if (s < 0.25 || s > 2.0)
        throw ParameterError("inviscid_limit_sweep: s must be in [1/4, 2]");

    Trajectory ref = evolve(phi, EquationSpec::make(Family::MKDV), T, cfg);

    SweepReport report;
    report.eps_values = eps_list;
    for (double e : eps_list) {
        Trajectory traj;
        try {
            traj = evolve(phi, EquationSpec::make(Family::MKDV_B, e, alpha), T, cfg);
        } catch (const BlowUpError& b) {
            throw BlowUpError("inviscid_limit_sweep: member eps=" + std::to_string(e) +
                                  " blew up: " + b.what(),
                              b.time);
        }
        double err = 0.0;
        for (size_t k = 0; k < traj.fields.size(); ++k) {
            RealField diff = traj.fields[k];
            for (int i = 0; i < diff.grid.n; ++i) diff.samples[i] -= ref.fields[k].samples[i];
            err = std::max(err, sobolev_norm(forward_transform(diff), s));
        }
        report.errors.push_back(err);
    }

    // Least-squares slope of log e vs log eps; undefined if any error is 0.
    bool all_positive = std::all_of(report.errors.begin(), report.errors.end(),
                                    [](double e) { return e > 0.0; });
    if (all_positive) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        size_t n = eps_list.size();
        for (size_t i = 0; i < n; ++i) {
            double x = std::log(eps_list[i]), y = std::log(report.errors[i]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        report.slope_defined = true;
    }

    for (size_t i = 0; i + 1 < eps_list.size(); ++i) {
        size_t a = i, b = i + 1;
        bool dec_eps = eps_list[a] > eps_list[b];
        double e_hi = dec_eps ? report.errors[a] : report.errors[b];
        double e_lo = dec_eps ? report.errors[b] : report.errors[a];
        if (e_lo > e_hi) report.monotone = false;
    }
    return report;
}

} // namespace mkdvb
