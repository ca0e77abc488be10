#ifndef MKDVB_EQUATION_HPP
#define MKDVB_EQUATION_HPP

#include "mkdvb/grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace mkdvb {

enum class Family { KDV, KDV_B, MKDV, MKDV_B };

std::string family_name(Family f);
Family family_from_name(const std::string& name);
bool is_dissipative(Family f);
bool is_cubic(Family f);

/// Which member of the KdV/MKdV(-Burgers) family to solve,
///   u_t + u_xxx + eps |d_x|^(2 alpha) u = N(u),
/// with N(u) = 3(u^2)_x (KdV), 2(u^2)_x (KdV-B), 2(u^3)_x (MKdV, MKdV-B).
struct EquationSpec {
    Family family = Family::MKDV;
    double eps = 0.0;
    double alpha = 1.0;

    static EquationSpec make(Family family, double eps = 0.0, double alpha = 1.0);
};

struct SolverConfig {
    double dt = 0.0;                // 0 selects the stability default
    double dealias_fraction = 0.0;  // 0 selects per-family default (2/3 or 1/2)
    int record_every = 1;
    bool order2_diagnostics = true; // also sample ||Lambda^(2a+1) u||^2

    double effective_dealias(Family f) const;
    double default_dt(const RealField& u) const;
};

struct Trajectory {
    EquationSpec equation;
    std::vector<double> times;       // snapshot times, strictly increasing from 0
    std::vector<RealField> fields;   // one per snapshot
    std::vector<double> step_times;  // every step, including t=0
    // Per-step dissipation integrands keyed by the seminorm order sigma:
    // values of homogeneous_seminorm(u, sigma)^2 on step_times.
    std::map<double, std::vector<double>> dissipation_samples;
};

RealField nonlinear_rhs(const RealField& u, const EquationSpec& eq, double dealias_fraction = 0.0);

RealField step(const RealField& u, const EquationSpec& eq, const SolverConfig& cfg);

Trajectory evolve(const RealField& phi, const EquationSpec& eq, double T, const SolverConfig& cfg);

/// Max over snapshots of the L2 gap between the solved lambda-rescaled
/// problem and the pointwise rescaling of the unit-scale solution.
/// The scaled problem runs on a box of length L/lambda with dissipation
/// lambda^(3-2 alpha) * eps out to time T/lambda^3.
double scaling_check(const RealField& phi, double lambda, double eps, double alpha, double T,
                     const SolverConfig& cfg, Family family = Family::MKDV_B);

struct SweepReport {
    std::vector<double> eps_values;
    std::vector<double> errors;      // sup over snapshots of ||u_eps - u_0||_{H^s}
    double slope = 0.0;              // least-squares slope of log e vs log eps
    bool slope_defined = false;
    bool monotone = true;            // soft check: e non-decreasing in eps
};

SweepReport inviscid_limit_sweep(const RealField& phi, const std::vector<double>& eps_list,
                                 double alpha, double s, double T, const SolverConfig& cfg);

} // namespace mkdvb

#endif
