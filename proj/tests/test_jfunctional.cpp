#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mkdvb/errors.hpp"
#include "mkdvb/jfunctional.hpp"

#include <cmath>

using namespace mkdvb;

namespace {

double rel_diff(double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

} // namespace

TEST_CASE("block lookup reproduces the stored cells") {
    BlockTuple t = make_random_tuple({0, 1, 2, 2}, {0, 0, 0, 0}, 42);
    for (const BlockFunction& f : t.f) {
        REQUIRE(f.samples.size() == 64);
        for (const auto& s : f.samples) {
            CHECK(f.lookup(s.a, s.b) == s.value);
            CHECK(s.value >= 0.0);
        }
        CHECK(f.lookup(0, 0) == 0.0); // xi = 0 is never inside a block
        CHECK(f.lookup(1LL << 40, 0) == 0.0);
        CHECK(f.l2() > 0.0);
    }
}

TEST_CASE("zero tuple evaluates to zero along both paths") {
    BlockTuple t = make_block_tuple({0, 1, 2, 2}, {0, 0, 0, 0},
                                    [](int, double, double) { return 0.0; });
    CHECK(brute_force_J(t) == 0.0);
    CHECK(convolution_J(t) == 0.0);
}

TEST_CASE("J is symmetric in the first three slots") {
    auto fn = [](int i, double xi, double mu) {
        return 1.0 + 0.1 * (i + 1) * std::cos(xi * 0.01) + 0.03 * std::sin(mu * 0.001 + i);
    };
    BlockTuple t = make_block_tuple({0, 1, 2, 2}, {0, 0, 0, 0}, fn);
    auto swapped_fn = [&](int i, double xi, double mu) {
        int src = i == 0 ? 1 : (i == 1 ? 0 : i);
        return fn(src, xi, mu);
    };
    BlockTuple ts = make_block_tuple({1, 0, 2, 2}, {0, 0, 0, 0}, swapped_fn);
    double a = brute_force_J(t);
    double b = brute_force_J(ts);
    CHECK(a != 0.0);
    CHECK(rel_diff(a, b) < 1e-12);
}

TEST_CASE("direct and convolution paths agree") {
    struct Probe {
        std::array<int, 4> k;
        std::array<int, 4> j;
    };
    // One representative per interaction regime, with the last modulation
    // raised where the resonance shift demands it.
    for (const Probe& p : {Probe{{0, 1, 2, 2}, {0, 0, 0, 0}},
                           Probe{{0, 1, 6, 6}, {0, 0, 0, 13}},
                           Probe{{1, 1, 1, 2}, {0, 0, 0, 0}},
                           Probe{{0, 5, 10, 10}, {0, 0, 0, 26}}}) {
        BlockTuple t = make_random_tuple(p.k, p.j, 7);
        double direct = brute_force_J(t);
        double conv = convolution_J(t);
        CHECK(direct != 0.0);
        CHECK(rel_diff(direct, conv) < 1e-9);
    }
}

TEST_CASE("tight budgets are refused") {
    BlockTuple t = make_random_tuple({0, 1, 2, 2}, {0, 0, 0, 0}, 3);
    CHECK_THROWS_AS(brute_force_J(t, 10), ParameterError);
    CHECK_THROWS_AS(convolution_J(t, 10), ParameterError);
}

TEST_CASE("case hypotheses are enforced") {
    CHECK_THROWS_AS(check_J_bound(JCase::A, {2, 1, 0, 0}, {0, 0, 0, 0}, 1), ParameterError);
    CHECK_THROWS_AS(check_J_bound(JCase::B, {0, 1, 2, 2}, {0, 0, 0, 0}, 1), ParameterError);
    CHECK_THROWS_AS(check_J_bound(JCase::C, {0, 1, 1, 2}, {0, 0, 0, 0}, 1), ParameterError);
    CHECK_THROWS_AS(check_J_bound(JCase::D, {0, 1, 2, 2}, {0, 0, 0, 0}, 1), ParameterError);
    CHECK_THROWS_AS(check_J_bound(JCase::A, {0, 1, 2, 2}, {0, 0, 0, -1}, 1), ParameterError);
}

TEST_CASE("bound ratios stay order one on random blocks") {
    struct Probe {
        JCase c;
        std::array<int, 4> k;
        std::array<int, 4> j;
    };
    for (const Probe& p : {Probe{JCase::A, {0, 1, 2, 2}, {0, 0, 0, 0}},
                           Probe{JCase::B, {0, 1, 6, 6}, {0, 0, 0, 13}},
                           Probe{JCase::C, {1, 1, 1, 2}, {0, 0, 0, 0}},
                           Probe{JCase::D, {0, 5, 10, 10}, {0, 0, 0, 26}}}) {
        BoundReport r = check_J_bound(p.c, p.k, p.j, 3, 1);
        CHECK(r.ratios.size() == 3);
        CHECK(r.max_ratio > 0.0);
        CHECK(r.max_ratio < 10.0);
    }
}
