#ifndef MKDVB_RESONANCE_HPP
#define MKDVB_RESONANCE_HPP

#include "mkdvb/errors.hpp"

namespace mkdvb {

struct ResonanceValue {
    double direct = 0.0;   // w(x1)+w(x2)+w(x3)-w(x1+x2+x3), w(x)=x^3
    double factored = 0.0; // 3(x1+x2)(x1+x3)(x1+x4), x4 = -(x1+x2+x3)
};

/// Both forms are evaluated in quad precision: the direct form loses up
/// to ~10 digits to cancellation in double when the factors are small,
/// while the inputs (binary doubles) are exact, so widening recovers the
/// identity to well below any double-precision tolerance.
inline ResonanceValue resonance(double x1, double x2, double x3) {
    using wide = __float128;
    auto w = [](wide x) { return x * x * x; };
    wide a = x1, b = x2, c = x3;
    wide sum = a + b + c;
    ResonanceValue r;
    r.direct = static_cast<double>(w(a) + w(b) + w(c) - w(sum));
    r.factored = static_cast<double>(wide(3) * (a + b) * (a + c) * (a - sum));
    return r;
}

/// Lowest well-posedness index of the dissipative family:
/// -3/4 on (0, 1/2], -3/(5-2a) on (1/2, 1].
inline double critical_regularity(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw ParameterError("critical_regularity: alpha must be in (0,1]");
    if (alpha <= 0.5) return -0.75;
    return -3.0 / (5.0 - 2.0 * alpha);
}

} // namespace mkdvb

#endif
