#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mkdvb/errors.hpp"
#include "mkdvb/grid.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace mkdvb;

namespace {

RealField random_field(const PeriodicGrid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    RealField u{g, std::vector<double>(g.n)};
    for (double& v : u.samples) v = gauss(rng);
    // One transform pass removes Nyquist content, which is pinned to zero.
    return inverse_transform(forward_transform(u));
}

} // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(make_grid(-1.0, 64), ParameterError);
    CHECK_THROWS_AS(make_grid(0.0, 64), ParameterError);
    CHECK_THROWS_AS(make_grid(10.0, 63), ParameterError);
    CHECK_THROWS_AS(make_grid(10.0, 4), ParameterError);
    PeriodicGrid g = make_grid(2.0 * M_PI, 16);
    CHECK(g.dx() == doctest::Approx(2.0 * M_PI / 16));
    CHECK(g.x(0) == doctest::Approx(-M_PI));
    CHECK(g.mode(1) == 1);
    CHECK(g.mode(15) == -1);
    CHECK(g.xi(15) == doctest::Approx(-1.0));
    CHECK(g.nyquist_index() == 8);
}

TEST_CASE("gaussian transform matches the closed form") {
    // For a e^{-x^2/2w^2} on a box wide enough that periodization is below
    // round-off, u_hat(xi) = a w sqrt(2 pi) e^{-w^2 xi^2 / 2}.
    PeriodicGrid g = make_grid(64.0 * M_PI, 1024);
    double a = 0.5, w = 2.0;
    RealField u = make_field(g, [&](double x) { return a * std::exp(-x * x / (2 * w * w)); });
    SpectralField s = forward_transform(u);
    for (int m : {0, 1, 5, 20, 60}) {
        double xi = 2.0 * M_PI * m / g.length;
        double expect = a * w * std::sqrt(2.0 * M_PI) * std::exp(-w * w * xi * xi / 2.0);
        CHECK(s.coeff[m].real() == doctest::Approx(expect).epsilon(1e-10));
        CHECK(std::abs(s.coeff[m].imag()) < 1e-12);
    }
}

TEST_CASE("parseval and round trip") {
    PeriodicGrid g = make_grid(10.0, 128);
    RealField u = random_field(g, 11);
    SpectralField s = forward_transform(u);

    double phys = 0.0;
    for (double v : u.samples) phys += v * v * g.dx();
    double spec = 0.0;
    for (auto& c : s.coeff) spec += std::norm(c) / g.length;
    CHECK(phys == doctest::Approx(spec).epsilon(1e-12));
    CHECK(l2_norm(u) == doctest::Approx(sobolev_norm(s, 0.0)).epsilon(1e-12));

    RealField back = inverse_transform(s);
    for (int i = 0; i < g.n; ++i) CHECK(back.samples[i] == doctest::Approx(u.samples[i]).epsilon(1e-12));
}

TEST_CASE("transform rejects bad payloads") {
    PeriodicGrid g = make_grid(10.0, 16);
    RealField u = zero_field(g);
    u.samples[3] = std::nan("");
    CHECK_THROWS_AS(forward_transform(u), DataError);

    SpectralField s{g, std::vector<std::complex<double>>(g.n, 0.0)};
    s.coeff[1] = {1.0, 0.0}; // no conjugate partner at n-1
    CHECK_THROWS_AS(inverse_transform(s), DataError);
}

TEST_CASE("derivative multiplier differentiates cosine") {
    PeriodicGrid g = make_grid(2.0 * M_PI, 64);
    RealField u = make_field(g, [](double x) { return std::cos(x); });
    RealField ux = inverse_transform(apply_multiplier(forward_transform(u), derivative_symbol()));
    for (int i = 0; i < g.n; ++i)
        CHECK(ux.samples[i] == doctest::Approx(-std::sin(g.x(i))).epsilon(1e-12));
}

TEST_CASE("nyquist mode is pinned to zero") {
    PeriodicGrid g = make_grid(2.0 * M_PI, 16);
    RealField u = make_field(g, [&](double x) { return std::cos(8.0 * x); }); // pure Nyquist
    SpectralField s = forward_transform(u);
    CHECK(std::abs(s.coeff[g.nyquist_index()]) == 0.0);
    SpectralField d = apply_multiplier(s, airy_symbol(0.3));
    CHECK(std::abs(d.coeff[g.nyquist_index()]) == 0.0);
}

TEST_CASE("propagator group and semigroup laws") {
    PeriodicGrid g = make_grid(30.0, 128);
    SpectralField s = forward_transform(random_field(g, 5));
    double t1 = 0.37, t2 = -0.12;

    SpectralField a = airy_evolve(airy_evolve(s, t1), t2);
    SpectralField b = airy_evolve(s, t1 + t2);
    for (int i = 0; i < g.n; ++i) CHECK(std::abs(a.coeff[i] - b.coeff[i]) < 1e-12);

    // W_eps(0) = identity up to the Nyquist pin.
    SpectralField w0 = dissipative_evolve(s, 0.0, 0.5, 1.0);
    for (int i = 0; i < g.n; ++i)
        if (i != g.nyquist_index()) CHECK(std::abs(w0.coeff[i] - s.coeff[i]) < 1e-14);

    // Forward semigroup, and contraction for t != 0.
    SpectralField c = dissipative_evolve(dissipative_evolve(s, 0.2, 0.3, 0.75), 0.3, 0.3, 0.75);
    SpectralField d = dissipative_evolve(s, 0.5, 0.3, 0.75);
    for (int i = 0; i < g.n; ++i) CHECK(std::abs(c.coeff[i] - d.coeff[i]) < 1e-12);
    CHECK(sobolev_norm(d, 0.0) <= sobolev_norm(s, 0.0));
    // |t| extension: backward time also damps.
    CHECK(sobolev_norm(dissipative_evolve(s, -0.5, 0.3, 0.75), 0.0) <= sobolev_norm(s, 0.0));
}

TEST_CASE("sobolev norms of a cosine") {
    PeriodicGrid g = make_grid(2.0 * M_PI, 64);
    SpectralField s = forward_transform(make_field(g, [](double x) { return std::cos(x); }));
    // ||cos||_{H^sigma}^2 = pi * 2^sigma on [0, 2pi).
    for (double sigma : {0.0, 0.5, 1.0, 2.0})
        CHECK(sobolev_norm(s, sigma) ==
              doctest::Approx(std::sqrt(M_PI * std::exp2(sigma))).epsilon(1e-12));
    // |xi| = 1 makes every homogeneous seminorm equal to the L2 norm.
    for (double sigma : {0.0, 1.0, 2.0})
        CHECK(homogeneous_seminorm(s, sigma) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK_THROWS_AS(sobolev_norm(s, 5.0), ParameterError);
    CHECK_THROWS_AS(homogeneous_seminorm(s, -1.0), ParameterError);
}

TEST_CASE("fractional power and symbol validation") {
    CHECK(fractional_power(0.0, 1.0) == 0.0);
    CHECK(fractional_power(2.0, 2.0) == doctest::Approx(4.0));
    CHECK(fractional_power(-2.0, 1.5) == doctest::Approx(std::pow(2.0, 1.5)));
    CHECK_THROWS_AS(dissipative_symbol(0.1, 2.0, 1.0), ParameterError);
    CHECK_THROWS_AS(dissipative_symbol(0.1, 0.5, 1.5), ParameterError);
    CHECK_THROWS_AS(dissipative_symbol(0.1, 0.5, 0.0), ParameterError);
}
