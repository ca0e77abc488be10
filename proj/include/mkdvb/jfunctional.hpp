#ifndef MKDVB_JFUNCTIONAL_HPP
#define MKDVB_JFUNCTIONAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace mkdvb {

/// A nonnegative function supported on the dyadic block I_k x I~_j,
/// piecewise constant on 8 cells per axis (4 per sign side on the
/// annulus; 8 across [-2,2] when j = 0). Samples sit at cell centers on
/// an integer lattice shared across a tuple, so frequency sums stay on
/// the lattice exactly; lookup() evaluates the function at an arbitrary
/// lattice point by cell membership (0 outside the block).
struct BlockFunction {
    int k = 0;
    int j = 0;
    double weight_xi = 0.0; // cell measure, xi axis
    double weight_mu = 0.0; // cell measure, mu axis
    long long xi_scale = 1; // 2^(k - k_min): xi cell width is 6 * xi_scale lattice units
    long long mu_scale = 1; // mu cell width in lattice units (j = 0: 2^(-1-m); else 6 * 2^(j-4-m))
    struct Sample {
        long long a = 0; // xi index on the common lattice
        long long b = 0; // mu index on the common lattice
        double value = 0.0;
    };
    std::vector<Sample> samples; // xi-major, cells ordered as constructed

    double l2() const;                          // sqrt(sum v^2 * weight_xi * weight_mu)
    double lookup(long long a, long long b) const; // cell-membership evaluation
};

struct BlockTuple {
    double dxi = 0.0;
    double dmu = 0.0;
    std::array<BlockFunction, 4> f;
};

/// Build a tuple of block functions with 8 points per axis per block and
/// values drawn from fn(i, xi, mu) for block index i.
BlockTuple make_block_tuple(const std::array<int, 4>& k, const std::array<int, 4>& j,
                            const std::function<double(int, double, double)>& fn);

BlockTuple make_random_tuple(const std::array<int, 4>& k, const std::array<int, 4>& j,
                             std::uint64_t seed);

/// Direct 6-dimensional summation of
///   J = sum f1 f2 f3 * f4(xi1+xi2+xi3, mu1+mu2+mu3+Omega)
/// with the dispersion relation snapped to the mu lattice (both paths
/// share the snap, so they evaluate the same discrete object).
double brute_force_J(const BlockTuple& tuple, std::uint64_t budget = 100000000ULL);

/// Second path through the sharp substitution f(xi, tau - w(xi)):
/// a triple sparse convolution in (xi, tau) indices paired with f4; the
/// resonance function never appears explicitly.
double convolution_J(const BlockTuple& tuple, std::uint64_t budget = 100000000ULL);

enum class JCase { A, B, C, D };

/// Right-hand side of the corresponding dyadic bound with constant 1.
double j_bound(JCase c, const BlockTuple& tuple);

struct BoundReport {
    JCase jcase = JCase::A;
    std::array<int, 4> k{};
    std::array<int, 4> j{};
    std::vector<double> ratios; // J / bound per trial
    double max_ratio = 0.0;
};

/// Stress-test one case of the dyadic estimate on random nonnegative
/// block functions; throws if the blocks violate the case hypotheses.
BoundReport check_J_bound(JCase c, const std::array<int, 4>& k, const std::array<int, 4>& j,
                          int trials, std::uint64_t seed = 0);

} // namespace mkdvb

#endif
