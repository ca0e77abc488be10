#include "mkdvb/jfunctional.hpp"

#include "mkdvb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace mkdvb {

namespace {

struct PairHash {
    size_t operator()(const std::pair<long long, long long>& p) const {
        return std::hash<long long>()(p.first * 1000003LL ^ p.second);
    }
};

using SparseMap = std::unordered_map<std::pair<long long, long long>, double, PairHash>;

// Dispersion relation omega(xi) = xi^3 snapped to the mu lattice.
long long snapped_omega(long long a, double dxi, double dmu) {
    double xi = a * dxi;
    return std::llround(xi * xi * xi / dmu);
}

} // namespace

double BlockFunction::l2() const {
    double acc = 0.0;
    for (const auto& s : samples) acc += s.value * s.value;
    return std::sqrt(acc * weight_xi * weight_mu);
}

double BlockFunction::lookup(long long a, long long b) const {
    // xi cells: |a| in [8,32) * xi_scale, four half-open cells of width
    // 6 * xi_scale per sign side, positive side listed first.
    if (a == 0) return 0.0;
    long long ua = a < 0 ? -a : a;
    if (ua < 8 * xi_scale || ua >= 32 * xi_scale) return 0.0;
    long long ia = (ua - 8 * xi_scale) / (6 * xi_scale) + (a < 0 ? 4 : 0);

    long long ib;
    if (j == 0) {
        // 8 cells across [-2, 2), width mu_scale lattice units each.
        if (b < -4 * mu_scale || b >= 4 * mu_scale) return 0.0;
        ib = (b + 4 * mu_scale) / mu_scale;
    } else {
        if (b == 0) return 0.0;
        long long ub = b < 0 ? -b : b;
        if (ub < 8 * mu_scale || ub >= 32 * mu_scale) return 0.0;
        ib = (ub - 8 * mu_scale) / (6 * mu_scale) + (b < 0 ? 4 : 0);
    }
    return samples[static_cast<size_t>(ia * 8 + ib)].value;
}

BlockTuple make_block_tuple(const std::array<int, 4>& k, const std::array<int, 4>& j,
                            const std::function<double(int, double, double)>& fn) {
    BlockTuple t;
    int kmin = *std::min_element(k.begin(), k.end());
    t.dxi = std::exp2(kmin - 4);
    int mu_exp = 100;
    for (int ji : j) mu_exp = std::min(mu_exp, ji == 0 ? -2 : ji - 4);
    t.dmu = std::exp2(mu_exp);

    for (int i = 0; i < 4; ++i) {
        BlockFunction& f = t.f[i];
        f.k = k[i];
        f.j = j[i];
        // 4 cells per sign side on the xi annulus, cell centers at
        // 2^(k-4) * {11,17,23,29}: exact multiples of dxi.
        f.weight_xi = 3.0 * std::exp2(k[i] - 3);
        f.xi_scale = 1LL << (k[i] - kmin);
        std::vector<long long> a_idx;
        for (int sgn : {1, -1})
            for (int c : {11, 17, 23, 29})
                a_idx.push_back(sgn * c * f.xi_scale);

        std::vector<long long> b_idx;
        if (j[i] == 0) {
            // 8 cells across [-2, 2]; centers (2q-7)/4.
            f.weight_mu = 0.5;
            f.mu_scale = 1LL << (-1 - mu_exp);
            for (int q = 0; q < 8; ++q)
                b_idx.push_back((2 * q - 7) * (f.mu_scale / 2));
        } else {
            f.weight_mu = 3.0 * std::exp2(j[i] - 3);
            f.mu_scale = 1LL << (j[i] - 4 - mu_exp);
            for (int sgn : {1, -1})
                for (int c : {11, 17, 23, 29})
                    b_idx.push_back(sgn * c * f.mu_scale);
        }
        for (long long a : a_idx)
            for (long long b : b_idx)
                f.samples.push_back({a, b, fn(i, a * t.dxi, b * t.dmu)});
    }
    return t;
}

BlockTuple make_random_tuple(const std::array<int, 4>& k, const std::array<int, 4>& j,
                             std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // Draw in deterministic sample order.
    return make_block_tuple(k, j, [&](int, double, double) { return unif(rng); });
}

double brute_force_J(const BlockTuple& t, std::uint64_t budget) {
    std::uint64_t cost = 1;
    for (int i = 0; i < 3; ++i) cost *= t.f[i].samples.size();
    if (cost > budget) throw ParameterError("brute_force_J: evaluation budget exceeded");

    const double w123 = t.f[0].weight_xi * t.f[0].weight_mu * t.f[1].weight_xi *
                        t.f[1].weight_mu * t.f[2].weight_xi * t.f[2].weight_mu;
    double acc = 0.0;
    for (const auto& s1 : t.f[0].samples) {
        long long w1 = snapped_omega(s1.a, t.dxi, t.dmu);
        for (const auto& s2 : t.f[1].samples) {
            long long w2 = snapped_omega(s2.a, t.dxi, t.dmu);
            double v12 = s1.value * s2.value;
            if (v12 == 0.0) continue;
            for (const auto& s3 : t.f[2].samples) {
                long long a4 = s1.a + s2.a + s3.a;
                // Resonance on the lattice: w(x1)+w(x2)+w(x3)-w(x1+x2+x3).
                long long omega = w1 + w2 + snapped_omega(s3.a, t.dxi, t.dmu) -
                                  snapped_omega(a4, t.dxi, t.dmu);
                acc += v12 * s3.value * t.f[3].lookup(a4, s1.b + s2.b + s3.b + omega);
            }
        }
    }
    return acc * w123;
}

double convolution_J(const BlockTuple& t, std::uint64_t budget) {
    // Move every factor to sharp coordinates tau = mu + w(xi), where the
    // integral becomes <f1# * f2# * f3#, f4#>; the resonance function
    // never appears.
    auto sharp = [&](const BlockFunction& f) {
        SparseMap m;
        for (const auto& s : f.samples)
            m[{s.a, s.b + snapped_omega(s.a, t.dxi, t.dmu)}] +=
                s.value * f.weight_xi * f.weight_mu;
        return m;
    };
    auto convolve = [budget](const SparseMap& x, const SparseMap& y) {
        if (static_cast<std::uint64_t>(x.size()) * y.size() > budget)
            throw ParameterError("convolution_J: evaluation budget exceeded");
        SparseMap out;
        out.reserve(x.size() * 4);
        for (const auto& [kx, vx] : x)
            for (const auto& [ky, vy] : y)
                out[{kx.first + ky.first, kx.second + ky.second}] += vx * vy;
        return out;
    };

    SparseMap conv = convolve(convolve(sharp(t.f[0]), sharp(t.f[1])), sharp(t.f[2]));
    double acc = 0.0;
    for (const auto& [key, v] : conv)
        acc += v * t.f[3].lookup(key.first,
                                 key.second - snapped_omega(key.first, t.dxi, t.dmu));
    return acc;
}

double j_bound(JCase c, const BlockTuple& t) {
    std::array<int, 4> ks, js;
    for (int i = 0; i < 4; ++i) {
        ks[i] = t.f[i].k;
        js[i] = t.f[i].j;
    }
    auto sorted_desc = [](std::array<int, 4> v) {
        std::sort(v.begin(), v.end(), std::greater<int>());
        return v; // [max, sec, thd, min]
    };
    auto kd = sorted_desc(ks), jd = sorted_desc(js);
    double prod = 1.0;
    for (const auto& f : t.f) prod *= f.l2();
    double jsum = 0.5 * (js[0] + js[1] + js[2] + js[3]);

    switch (c) {
        case JCase::A:
            return std::exp2(0.5 * (jd[3] + jd[2])) * std::exp2(0.5 * (kd[3] + kd[2])) * prod;
        case JCase::B: {
            double base = std::exp2(jsum - 0.5 * jd[0]) * std::exp2(-kd[0]);
            double side = (js[1] == jd[0]) ? std::exp2(0.5 * kd[2]) : std::exp2(0.5 * kd[3]);
            return base * side * prod;
        }
        case JCase::C:
            return std::exp2(jsum - 0.5 * jd[0]) * std::exp2(-(ks[0] + ks[1] + ks[2]) / 6.0) *
                   prod;
        case JCase::D:
            return std::exp2(jsum) * std::exp2(-1.5 * kd[0]) * prod;
    }
    return 0.0;
}

BoundReport check_J_bound(JCase c, const std::array<int, 4>& k, const std::array<int, 4>& j,
                          int trials, std::uint64_t seed) {
    for (int ji : j)
        if (ji < 0) throw ParameterError("check_J_bound: j indices must be non-negative");
    int kmax = *std::max_element(k.begin(), k.end());
    int kmin = *std::min_element(k.begin(), k.end());
    bool sorted = std::is_sorted(k.begin(), k.end());
    switch (c) {
        case JCase::A:
            if (!sorted) throw ParameterError("case (a) requires k1<=k2<=k3<=k4");
            break;
        case JCase::B:
            if (!sorted || k[1] > k[2] - 5)
                throw ParameterError("case (b) requires sorted k with k2<=k3-5");
            break;
        case JCase::C:
            for (int ki : k)
                if (ki < 1) throw ParameterError("case (c) requires k in N");
            break;
        case JCase::D:
            if (kmin > kmax - 10) throw ParameterError("case (d) requires kmin<=kmax-10");
            break;
    }

    BoundReport report;
    report.jcase = c;
    report.k = k;
    report.j = j;
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(c) * 7919ULL +
                          static_cast<std::uint64_t>(trial);
        BlockTuple tuple = make_random_tuple(k, j, s);
        double jv = brute_force_J(tuple);
        double bound = j_bound(c, tuple);
        report.ratios.push_back(bound > 0.0 ? jv / bound : 0.0);
    }
    for (double r : report.ratios) report.max_ratio = std::max(report.max_ratio, r);
    return report;
}

} // namespace mkdvb
