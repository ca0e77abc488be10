#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mkdvb/equation.hpp"
#include "mkdvb/errors.hpp"
#include "mkdvb/profiles.hpp"

#include <cmath>

using namespace mkdvb;

namespace {

RealField gaussian(const PeriodicGrid& g) { return make_profile(g, DataSpec{}); }

double gap_to(const RealField& a, const RealField& b) {
    RealField d = a;
    for (int i = 0; i < d.grid.n; ++i) d.samples[i] -= b.samples[i];
    return l2_norm(d);
}

} // namespace

TEST_CASE("equation spec validation") {
    CHECK_THROWS_AS(EquationSpec::make(Family::MKDV, 0.1), ParameterError);
    CHECK_THROWS_AS(EquationSpec::make(Family::MKDV_B, 0.0), ParameterError);
    CHECK_THROWS_AS(EquationSpec::make(Family::MKDV_B, 2.0), ParameterError);
    CHECK_THROWS_AS(EquationSpec::make(Family::KDV_B, 0.5, 1.5), ParameterError);
    CHECK_THROWS_AS(family_from_name("burgers"), ParameterError);
    CHECK(family_from_name("mkdv-b") == Family::MKDV_B);
    CHECK(family_name(Family::KDV_B) == "kdv-b");
    CHECK(is_cubic(Family::MKDV_B));
    CHECK_FALSE(is_cubic(Family::KDV));
    CHECK(is_dissipative(Family::KDV_B));
}

TEST_CASE("nonlinear term of a cosine matches trigonometry") {
    PeriodicGrid g = make_grid(2.0 * M_PI, 64);
    RealField u = make_field(g, [](double x) { return std::cos(x); });

    // MKdV: 2(u^3)_x = -(3/2)(sin x + sin 3x).
    RealField nm = nonlinear_rhs(u, EquationSpec::make(Family::MKDV));
    for (int i = 0; i < g.n; ++i) {
        double x = g.x(i);
        CHECK(nm.samples[i] ==
              doctest::Approx(-1.5 * (std::sin(x) + std::sin(3 * x))).epsilon(1e-12));
    }

    // KdV: 3(u^2)_x = -3 sin 2x.
    RealField nk = nonlinear_rhs(u, EquationSpec::make(Family::KDV));
    for (int i = 0; i < g.n; ++i)
        CHECK(nk.samples[i] == doctest::Approx(-3.0 * std::sin(2 * g.x(i))).epsilon(1e-12));

    // KdV-B carries the coefficient 2 instead.
    RealField nb = nonlinear_rhs(u, EquationSpec::make(Family::KDV_B, 0.5));
    for (int i = 0; i < g.n; ++i)
        CHECK(nb.samples[i] == doctest::Approx(-2.0 * std::sin(2 * g.x(i))).epsilon(1e-12));
}

TEST_CASE("stepper converges at fourth order") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 512);
    RealField phi = gaussian(g);
    auto final_at = [&](double dt) {
        SolverConfig cfg;
        cfg.dt = dt;
        cfg.record_every = 1 << 30;
        return evolve(phi, EquationSpec::make(Family::MKDV), 0.2, cfg).fields.back();
    };
    RealField ref = final_at(0.00125);
    double g1 = gap_to(final_at(0.01), ref);
    double g2 = gap_to(final_at(0.005), ref);
    double g3 = gap_to(final_at(0.0025), ref);
    CHECK(g1 / g2 >= 14.0);
    CHECK(g1 / g2 <= 18.0);
    CHECK(g2 / g3 >= 14.0);
    CHECK(g2 / g3 <= 18.0);
}

TEST_CASE("trajectory invariants: mass, mean, realness") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 512);
    RealField phi = gaussian(g);
    SolverConfig cfg;
    cfg.dt = 0.005;
    cfg.record_every = 10;
    Trajectory traj = evolve(phi, EquationSpec::make(Family::MKDV), 0.5, cfg);

    double m0 = l2_norm(traj.fields.front());
    double mean0 = 0.0;
    for (double v : phi.samples) mean0 += v * g.dx();
    for (const auto& f : traj.fields) {
        CHECK(std::abs(l2_norm(f) - m0) / m0 < 1e-8);
        double mean = 0.0;
        for (double v : f.samples) mean += v * g.dx();
        CHECK(std::abs(mean - mean0) < 1e-10);
        for (double v : f.samples) CHECK(std::isfinite(v));
    }
    CHECK(traj.times.size() == 11); // 0.5 / (0.005 * 10) + initial
    CHECK(traj.step_times.size() == 101);
    CHECK(traj.dissipation_samples.count(1.0) == 1);
    CHECK(traj.dissipation_samples.count(2.0) == 1);
    CHECK(traj.dissipation_samples.count(3.0) == 1);
}

TEST_CASE("dissipation strictly decreases the mass") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 512);
    RealField phi = gaussian(g);
    SolverConfig cfg;
    cfg.dt = 0.01;
    Trajectory traj = evolve(phi, EquationSpec::make(Family::MKDV_B, 0.1, 1.0), 0.5, cfg);
    double before = l2_norm(traj.fields.front());
    double after = l2_norm(traj.fields.back());
    CHECK(after < before);
}

TEST_CASE("runaway step is detected as blow-up") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 256);
    RealField phi = make_profile(g, DataSpec{"gaussian", 5.0, 2.0});
    SolverConfig cfg;
    cfg.dt = 5.0; // far beyond the stability envelope
    CHECK_THROWS_AS(evolve(phi, EquationSpec::make(Family::MKDV), 50.0, cfg), BlowUpError);
}

TEST_CASE("scaling identities") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 256);
    RealField phi = gaussian(g);
    SolverConfig cfg;
    cfg.dt = 0.01;

    CHECK(scaling_check(phi, 1.0, 0.01, 1.0, 0.25, cfg) <= 1e-12);
    CHECK(scaling_check(zero_field(g), 0.5, 0.01, 1.0, 0.25, cfg) == 0.0);
    CHECK(scaling_check(phi, 0.5, 0.01, 1.0, 0.25, cfg) < 1e-6);
    CHECK(scaling_check(phi, 0.5, 0.0, 1.0, 0.25, cfg) < 1e-6);
    CHECK_THROWS_AS(scaling_check(phi, 1.5, 0.01, 1.0, 0.25, cfg), ParameterError);
}

TEST_CASE("inviscid sweep validation and trivial data") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 256);
    SolverConfig cfg;
    cfg.dt = 0.02;
    std::vector<double> eps = {1e-1, 1e-2, 1e-3, 1e-4};

    CHECK_THROWS_AS(inviscid_limit_sweep(gaussian(g), {0.1, 0.01}, 1.0, 1.0, 0.1, cfg),
                    ParameterError);
    CHECK_THROWS_AS(inviscid_limit_sweep(gaussian(g), {0.1, 0.09, 0.08, 0.07}, 1.0, 1.0, 0.1, cfg),
                    ParameterError);
    CHECK_THROWS_AS(inviscid_limit_sweep(gaussian(g), eps, 1.0, 3.0, 0.1, cfg), ParameterError);

    SweepReport r = inviscid_limit_sweep(zero_field(g), eps, 1.0, 1.0, 0.1, cfg);
    CHECK_FALSE(r.slope_defined);
    for (double e : r.errors) CHECK(e == 0.0);
}

TEST_CASE("inviscid sweep on a gaussian converges with slope near one") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 512);
    SolverConfig cfg;
    cfg.dt = 0.02;
    SweepReport r = inviscid_limit_sweep(gaussian(g), {1e-1, 1e-2, 1e-3, 1e-4}, 1.0, 1.0, 0.5, cfg);
    CHECK(r.slope_defined);
    CHECK(r.slope >= 0.5);
    CHECK(r.monotone);
    CHECK(r.errors.back() < 1e-2 * r.errors.front());
}
