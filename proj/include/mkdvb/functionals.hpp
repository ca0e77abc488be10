#ifndef MKDVB_FUNCTIONALS_HPP
#define MKDVB_FUNCTIONALS_HPP

#include "mkdvb/equation.hpp"
#include "mkdvb/grid.hpp"

#include <string>
#include <vector>

namespace mkdvb {

/// Per-snapshot values of a conserved (or budgeted) quantity along a run.
struct FunctionalReport {
    std::string name;
    std::vector<double> values;
    double drift = 0.0;           // max |v(t) - v(0)| / (1 + |v(0)|)
    double budget_residual = 0.0; // filled by balance checks
};

// integral u_x^2 + u^4 + u^2 dx, conserved by MKdV (u_t + u_xxx = 2(u^3)_x;
// the sign of the quartic term is pinned by this orientation of the flux).
double h1_mkdv(const RealField& u);
// integral u_x^2 + 2 u^3 dx, conserved by KdV.
double h1_kdv(const RealField& u);
// integral u_xx^2 + 10 u^2 u_x^2 + 2 u^6 dx, conserved by MKdV.
double h2_mkdv(const RealField& u);
// h2 plus the L2 mass, integral ... + u^2 dx.
double h2p_mkdv(const RealField& u);

FunctionalReport functional_along(const Trajectory& traj, const std::string& name,
                                  double (*fn)(const RealField&));

/// eps^(1/2) * (trapezoid of ||Lambda^sigma u||_2^2 over [0,T])^(1/2).
double dissipation_budget(const Trajectory& traj, double sigma);

struct GnRatios {
    double r6 = 0.0; // ||u||_6^6 / (||u||_2^4 ||u_x||_2^2)
    double r4 = 0.0; // ||u||_4^4 / (||u||_2^3 ||u_x||_2)
};

GnRatios gn_ratios(const RealField& u);

/// The map v -> v_x + v^2 carrying MKdV solutions to KdV solutions.
RealField miura_transform(const RealField& v);

/// Max over interior snapshots of ||d_t(Mv) + (Mv)_xxx - 3((Mv)^2)_x||_2,
/// with d_t by centered differences on the snapshot stride.
double miura_consistency(const Trajectory& traj);

} // namespace mkdvb

#endif
