#ifndef MKDVB_SPACETIME_HPP
#define MKDVB_SPACETIME_HPP

#include "mkdvb/grid.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace mkdvb {

/// A function sampled on a space-time box: N spatial points on the
/// periodic grid times M uniform samples on [t0, t0 + T_w), treated as
/// periodic in time. Coefficients follow
///   F(xi, tau) = dx dt sum u(x_i, t_j) exp(-i x_i xi) exp(-i t_j tau)
/// with tau_n = 2 pi n / T_w in DFT order on the slow axis.
struct SpaceTimeField {
    PeriodicGrid grid;
    double t0 = 0.0;
    double window = 0.0; // T_w
    int nt = 0;          // M
    std::vector<std::complex<double>> coeff; // row-major (nt, nx)
    double taper_mass_loss = 0.0;

    double dt() const { return window / nt; }
    double t(int j) const { return t0 + j * dt(); }
    double tau(int n_idx) const {
        int n = n_idx < nt / 2 ? n_idx : n_idx - nt;
        return 2.0 * M_PI * n / window;
    }
    std::complex<double>& at(int n_idx, int m_idx) { return coeff[static_cast<size_t>(n_idx) * grid.n + m_idx]; }
    const std::complex<double>& at(int n_idx, int m_idx) const { return coeff[static_cast<size_t>(n_idx) * grid.n + m_idx]; }
};

/// Sample fn(x, t) on the box; if taper is set, multiply by a smooth
/// profile that is 1 on the middle of the window and 0 at its edges.
SpaceTimeField make_spacetime(const PeriodicGrid& grid, double t0, double window, int nt,
                              const std::function<std::complex<double>(double, double)>& fn,
                              bool taper = false);

/// Physical samples (row-major (nt, nx)) recovered from the coefficients.
std::vector<std::complex<double>> spacetime_values(const SpaceTimeField& F);

double spacetime_l2(const SpaceTimeField& F);

struct XkNorm {
    double value = 0.0;
    std::vector<double> terms; // 2^(j/2) ||eta_j(tau - xi^3) f||_L2 per j
    int truncation_j = 0;
};

/// Dyadic modulation norm sum_j 2^(j/2) ||eta_j(tau - xi^3) f||_L2 of the
/// given field, truncated at the temporal Nyquist.
XkNorm xk_block_norm(const SpaceTimeField& F, int k);

double fs_norm(const SpaceTimeField& F, double s);
double ns_norm(const SpaceTimeField& F, double s);

struct LinearBoundReport {
    std::vector<double> eps_values;
    std::vector<double> ratios; // fs_norm(psi W_eps phi) / ||phi||_{H^s}
    bool uniform = true;        // max/min ratio <= 10
};

LinearBoundReport check_linear_fs_bound(const SpectralField& phi,
                                        const std::vector<double>& eps_list, double alpha,
                                        double s, int nt = 256);

/// ||W_0(t) P_k f||_{L^6([0,T_w] x torus)} * 2^(k/6) / ||P_k f||_2;
/// empty when the projected datum vanishes.
std::optional<double> airy_l6_ratio(int k, const SpectralField& f, double window, int nt = 128);

} // namespace mkdvb

#endif
