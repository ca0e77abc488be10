#ifndef MKDVB_PROFILES_HPP
#define MKDVB_PROFILES_HPP

#include "mkdvb/grid.hpp"

#include <cstdint>
#include <string>

namespace mkdvb {

/// Reproducible initial-data menu.
///   gaussian(a, w):  a * exp(-x^2 / (2 w^2))
///   sech(a, w):      a / cosh(x / w)
///   cosine(a, m):    a * cos(2 pi m x / L)
///   random-bandlimited(seed, band): unit-L2 random field on modes 1..band,
///   scaled by a.
struct DataSpec {
    std::string profile = "gaussian";
    double amplitude = 0.5;
    double width = 2.0;
    int mode = 1;
    int band = 8;
    std::uint64_t seed = 0;
};

RealField make_profile(const PeriodicGrid& grid, const DataSpec& spec);

} // namespace mkdvb

#endif
