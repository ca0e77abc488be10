#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mkdvb/dyadic.hpp"
#include "mkdvb/errors.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace mkdvb;

namespace {

// Real field supported on spectral modes [lo, hi] of the given grid.
RealField band_field(const PeriodicGrid& g, int lo, int hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SpectralField s{g, std::vector<std::complex<double>>(g.n, 0.0)};
    for (int m = lo; m <= hi; ++m) {
        std::complex<double> c(gauss(rng), gauss(rng));
        s.coeff[m] = c;
        s.coeff[g.n - m] = std::conj(c);
    }
    return inverse_transform(s);
}

} // namespace

TEST_CASE("eta0 golden values") {
    CHECK(eta0(0.0) == 1.0);
    CHECK(eta0(1.25) == 1.0);
    CHECK(eta0(1.3) == doctest::Approx(0.997080250207608).epsilon(1e-13));
    CHECK(eta0(1.4) == doctest::Approx(0.641834045088732).epsilon(1e-13));
    CHECK(eta0(1.5) == doctest::Approx(0.109096821195613).epsilon(1e-13));
    CHECK(eta0(1.6) == 0.0);
    CHECK(eta0(100.0) == 0.0);
    for (double xi : {0.3, 1.3, 1.45, 2.0}) CHECK(eta0(xi) == eta0(-xi));
}

TEST_CASE("eta_k telescopes to a partition of unity") {
    const int K = 6;
    for (double xi : {0.0, 0.7, 1.0, 1.31, 2.5, 7.9, 40.0, -13.2}) {
        double sum = 0.0;
        for (int k = 0; k <= K; ++k) sum += eta_k(k, xi);
        CHECK(sum == doctest::Approx(eta0(xi / std::exp2(K))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(eta_k(-1, 1.0), ParameterError);
}

TEST_CASE("eta_k support containment") {
    for (int k = 1; k <= 5; ++k) {
        double lo = 1.25 * std::exp2(k - 1); // below: the lower eta0 is still 1
        double hi = 1.6 * std::exp2(k);      // above: both cutoffs vanish
        CHECK(eta_k(k, 0.9 * lo) == 0.0);
        CHECK(eta_k(k, 1.01 * hi) == 0.0);
        CHECK(eta_k(k, 1.6 * std::exp2(k - 1)) > 0.99); // plateau of the annulus
    }
    // chi_k extends the same shape to k < 0.
    CHECK(chi_k(-2, 0.35) == doctest::Approx(eta_k(1, 0.35 * 8)).epsilon(1e-13));
}

TEST_CASE("psi window") {
    CHECK(psi_window(0.0) == 1.0);
    CHECK(psi_window(1.0) == 1.0);
    CHECK(psi_window(-1.0) == 1.0);
    CHECK(psi_window(2.0) == 0.0);
    CHECK(psi_window(1.5) > 0.0);
    CHECK(psi_window(1.5) < 1.0);
    CHECK(psi_window(1.5) == psi_window(-1.5));
}

TEST_CASE("P_k picks out a pure cosine") {
    PeriodicGrid g = make_grid(2.0 * M_PI, 64);
    SpectralField s = forward_transform(make_field(g, [](double x) { return std::cos(x); }));
    RealField p0 = inverse_transform(project_Pk(s, 0));
    RealField p2 = inverse_transform(project_Pk(s, 2));
    for (int i = 0; i < g.n; ++i) {
        CHECK(p0.samples[i] == doctest::Approx(std::cos(g.x(i))).epsilon(1e-12));
        CHECK(std::abs(p2.samples[i]) < 1e-14);
    }
    CHECK_THROWS_AS(project_Pk(s, -1), ParameterError);
}

TEST_CASE("separated projections are near orthogonal") {
    PeriodicGrid g = make_grid(64.0 * M_PI, 512);
    SpectralField s = forward_transform(band_field(g, 40, 200, 3));
    for (int k = 0; k <= 3; ++k)
        for (int kp = k + 2; kp <= 5; ++kp) {
            double cross = sobolev_norm(project_Pk(project_Pk(s, k), kp), 0.0);
            CHECK(cross < 1e-13 * sobolev_norm(s, 0.0));
        }
}

TEST_CASE("square sum of projections is comparable to the mass") {
    // Data kept away from |xi| < 1 so the full dyadic stack is seen.
    PeriodicGrid g = make_grid(64.0 * M_PI, 512);
    SpectralField s = forward_transform(band_field(g, 40, 80, 7));
    double total = sobolev_norm(s, 0.0);
    double sq = 0.0;
    for (int k = 0; k <= 8; ++k) {
        double nk = sobolev_norm(project_Pk(s, k), 0.0);
        sq += nk * nk;
    }
    CHECK(sq >= 0.5 * total * total);
    CHECK(sq <= 2.0 * total * total);
}
