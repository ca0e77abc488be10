#include "mkdvb/spacetime.hpp"

#include "mkdvb/dyadic.hpp"
#include "mkdvb/errors.hpp"
#include "mkdvb/fft.hpp"

#include <algorithm>
#include <cmath>

namespace mkdvb {

SpaceTimeField make_spacetime(const PeriodicGrid& grid, double t0, double window, int nt,
                              const std::function<std::complex<double>(double, double)>& fn,
                              bool taper) {
    if (!(window > 0.0) || nt < 8) throw ParameterError("make_spacetime: bad window");
    SpaceTimeField F;
    F.grid = grid;
    F.t0 = t0;
    F.window = window;
    F.nt = nt;
    F.coeff.resize(static_cast<size_t>(nt) * grid.n);

    double raw_mass = 0.0, tapered_mass = 0.0;
    for (int j = 0; j < nt; ++j) {
        double t = t0 + j * (window / nt);
        double w = 1.0;
        if (taper) {
            // Smooth roll-off over the outer 15% of the window on each side.
            double frac = static_cast<double>(j) / nt;
            double d = std::min(frac, 1.0 - frac - 1.0 / nt);
            double edge = 0.15;
            w = d >= edge ? 1.0 : psi_window(2.0 - d / edge);
        }
        for (int i = 0; i < grid.n; ++i) {
            auto v = fn(grid.x(i), t);
            raw_mass += std::norm(v);
            tapered_mass += std::norm(w * v);
            F.coeff[static_cast<size_t>(j) * grid.n + i] = w * v;
        }
    }
    F.taper_mass_loss =
        raw_mass > 0.0 ? 1.0 - std::sqrt(tapered_mass / raw_mass) : 0.0;

    fft::dft2_forward(F.coeff, nt, grid.n);
    const double dxdt = grid.dx() * (window / nt);
    for (int n_idx = 0; n_idx < nt; ++n_idx) {
        std::complex<double> tphase = std::exp(std::complex<double>(0.0, -t0 * F.tau(n_idx)));
        for (int m_idx = 0; m_idx < grid.n; ++m_idx) {
            double xsign = (m_idx % 2 == 0) ? 1.0 : -1.0;
            F.at(n_idx, m_idx) *= dxdt * xsign * tphase;
        }
    }
    return F;
}

std::vector<std::complex<double>> spacetime_values(const SpaceTimeField& F) {
    std::vector<std::complex<double>> buf = F.coeff;
    const int nt = F.nt, nx = F.grid.n;
    for (int n_idx = 0; n_idx < nt; ++n_idx) {
        std::complex<double> tphase = std::exp(std::complex<double>(0.0, F.t0 * F.tau(n_idx)));
        for (int m_idx = 0; m_idx < nx; ++m_idx) {
            double xsign = (m_idx % 2 == 0) ? 1.0 : -1.0;
            buf[static_cast<size_t>(n_idx) * nx + m_idx] *= xsign * tphase;
        }
    }
    fft::dft2_backward(buf, nt, nx);
    const double scale = 1.0 / (F.grid.length * F.window);
    for (auto& v : buf) v *= scale;
    return buf;
}

double spacetime_l2(const SpaceTimeField& F) {
    double acc = 0.0;
    for (const auto& c : F.coeff) acc += std::norm(c);
    return std::sqrt(acc / (F.grid.length * F.window));
}

XkNorm xk_block_norm(const SpaceTimeField& F, int k) {
    double xi_nyq = M_PI * F.grid.n / F.grid.length;
    if (std::exp2(k - 1) > xi_nyq)
        throw ParameterError("xk_block_norm: block beyond the spatial Nyquist");

    // Largest |tau - xi^3| reachable on the lattice fixes the truncation.
    double tau_max = M_PI * F.nt / F.window;
    double theta_max = tau_max + xi_nyq * xi_nyq * xi_nyq;
    int jmax = std::max(1, static_cast<int>(std::ceil(std::log2(theta_max))) + 1);

    XkNorm out;
    out.truncation_j = jmax;
    out.terms.assign(jmax + 1, 0.0);
    const double cell = 1.0 / (F.grid.length * F.window);
    for (int j = 0; j <= jmax; ++j) {
        double acc = 0.0;
        for (int n_idx = 0; n_idx < F.nt; ++n_idx) {
            double tau = F.tau(n_idx);
            for (int m_idx = 0; m_idx < F.grid.n; ++m_idx) {
                double xi = F.grid.xi(m_idx);
                double w = eta_k(j, tau - xi * xi * xi);
                if (w == 0.0) continue;
                acc += w * w * std::norm(F.at(n_idx, m_idx)) * cell;
            }
        }
        out.terms[j] = std::exp2(0.5 * j) * std::sqrt(acc);
        out.value += out.terms[j];
    }
    return out;
}

namespace {

double dyadic_sum_norm(const SpaceTimeField& F, double s, bool modulation_weight) {
    double xi_nyq = M_PI * F.grid.n / F.grid.length;
    int kmax = std::max(1, static_cast<int>(std::ceil(std::log2(xi_nyq))) + 1);
    double total = 0.0;
    for (int k = 0; k <= kmax; ++k) {
        SpaceTimeField block = F;
        bool any = false;
        for (int n_idx = 0; n_idx < F.nt; ++n_idx) {
            double tau = F.tau(n_idx);
            for (int m_idx = 0; m_idx < F.grid.n; ++m_idx) {
                double xi = F.grid.xi(m_idx);
                double w = eta_k(k, xi);
                if (modulation_weight && w != 0.0) {
                    double theta = tau - xi * xi * xi;
                    w /= std::sqrt(1.0 + theta * theta);
                }
                block.at(n_idx, m_idx) *= w;
                any = any || w != 0.0;
            }
        }
        if (!any) continue;
        double xk = xk_block_norm(block, k).value;
        total += std::exp2(2.0 * s * k) * xk * xk;
    }
    return std::sqrt(total);
}

} // namespace

double fs_norm(const SpaceTimeField& F, double s) { return dyadic_sum_norm(F, s, false); }

double ns_norm(const SpaceTimeField& F, double s) { return dyadic_sum_norm(F, s, true); }

LinearBoundReport check_linear_fs_bound(const SpectralField& phi,
                                        const std::vector<double>& eps_list, double alpha,
                                        double s, int nt) {
    // phi must be band-limited below half Nyquist so that the windowed
    // free wave is resolvable on the space-time lattice.
    double xi_half = 0.5 * M_PI * phi.grid.n / phi.grid.length;
    double tail = 0.0, total = 0.0;
    for (int idx = 0; idx < phi.grid.n; ++idx) {
        double e = std::norm(phi.coeff[idx]);
        total += e;
        if (std::abs(phi.grid.xi(idx)) > xi_half) tail += e;
    }
    if (total > 0.0 && tail > 1e-16 * total)
        throw ParameterError("check_linear_fs_bound: datum not band-limited below Nyquist/2");

    LinearBoundReport report;
    report.eps_values = eps_list;
    double hs = sobolev_norm(phi, s);
    for (double eps : eps_list) {
        if (hs == 0.0) {
            report.ratios.push_back(0.0);
            continue;
        }
        // Evaluate psi(t) W_eps^alpha(t) phi column-by-column in time.
        const PeriodicGrid g = phi.grid;
        std::vector<std::vector<std::complex<double>>> cols(nt);
        double t0 = -4.0, window = 8.0;
        for (int j = 0; j < nt; ++j) {
            double t = t0 + j * (window / nt);
            double w = psi_window(t);
            cols[j].assign(g.n, 0.0);
            if (w == 0.0) continue;
            for (int idx = 0; idx < g.n; ++idx) {
                double xi = g.xi(idx);
                std::complex<double> sym = std::exp(std::complex<double>(
                    -eps * fractional_power(xi, 2.0 * alpha) * std::abs(t), xi * xi * xi * t));
                cols[j][idx] = w * sym * phi.coeff[idx];
            }
        }
        // Inverse in x per column, then sample as a space-time field.
        std::vector<std::vector<std::complex<double>>> vals(nt);
        for (int j = 0; j < nt; ++j) {
            auto buf = cols[j];
            for (int idx = 0; idx < g.n; ++idx)
                buf[idx] *= (idx % 2 == 0) ? 1.0 : -1.0;
            fft::dft_backward(buf);
            for (auto& v : buf) v /= g.length;
            vals[j] = std::move(buf);
        }
        SpaceTimeField F = make_spacetime(
            g, t0, window, nt,
            [&](double x, double t) {
                int j = static_cast<int>(std::lround((t - t0) / (window / nt)));
                int i = static_cast<int>(std::lround((x + 0.5 * g.length) / g.dx()));
                return vals[j][i];
            },
            false);
        report.ratios.push_back(fs_norm(F, s) / hs);
    }
    double lo = 1e300, hi = 0.0;
    for (double r : report.ratios) {
        if (r <= 0.0) continue;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (hi > 0.0 && hi / lo > 10.0) report.uniform = false;
    return report;
}

std::optional<double> airy_l6_ratio(int k, const SpectralField& f, double window, int nt) {
    double xi_half = 0.5 * M_PI * f.grid.n / f.grid.length;
    if (std::exp2(k + 1) > xi_half)
        throw ParameterError("airy_l6_ratio: block beyond Nyquist/2");
    SpectralField fk = project_Pk(f, k);
    double mass = sobolev_norm(fk, 0.0);
    if (mass == 0.0) return std::nullopt;

    const PeriodicGrid& g = f.grid;
    double dt = window / nt;
    double acc = 0.0;
    for (int j = 0; j <= nt; ++j) {
        double t = j * dt;
        auto buf = airy_evolve(fk, t).coeff;
        for (int idx = 0; idx < g.n; ++idx)
            buf[idx] *= (idx % 2 == 0) ? 1.0 : -1.0;
        fft::dft_backward(buf);
        double slice = 0.0;
        for (auto& v : buf) {
            double a = std::norm(v / g.length);
            slice += a * a * a;
        }
        slice *= g.dx();
        acc += (j == 0 || j == nt) ? 0.5 * slice : slice; // trapezoid in t
    }
    acc *= dt;
    double l6 = std::pow(acc, 1.0 / 6.0);
    return l6 * std::exp2(k / 6.0) / mass;
}

} // namespace mkdvb
