#ifndef MKDVB_DYADIC_HPP
#define MKDVB_DYADIC_HPP

#include "mkdvb/grid.hpp"

namespace mkdvb {

/// Smooth even bump: 1 on [-5/4, 5/4], supported in [-8/5, 8/5], built
/// from the exp(-1/x) mollifier step.
double eta0(double xi);

/// eta_k(xi) = eta0(xi/2^k) - eta0(xi/2^(k-1)), k >= 1; eta_0 = eta0.
double eta_k(int k, double xi);

/// Homogeneous family chi_k for k in Z, same difference formula.
double chi_k(int k, double xi);

/// Smooth time window: 1 on [-1, 1], supported in [-2, 2].
double psi_window(double t);

/// Frequency projector with multiplier chi_k, k >= 0.
SpectralField project_Pk(const SpectralField& s, int k);

} // namespace mkdvb

#endif
