#pragma once

#include <vector>

#include "specpot/algebra/ratfun.hpp"

namespace specpot {

/// A gauge sample: M(z, energy) = value.
struct InterpNode {
    CoeffField energy;
    RatFun value;
};

struct DegreeSpec {
    unsigned num_deg = 0;
    unsigned den_deg = 0;

    /// (floor(n/2), floor((n-1)/2)); n = 0 gives (0, 0).
    static DegreeSpec for_count(unsigned n) { return {n / 2, n == 0 ? 0 : (n - 1) / 2}; }
};

/// Rational interpolant in E through all nodes, obtained from the reciprocal
/// values with swapped degrees and falling back to the direct system.
RatFun rat_interpolate(const std::vector<InterpNode>& nodes);

/// Cauchy interpolation with explicit degrees.
RatFun rat_interpolate(const std::vector<InterpNode>& nodes, DegreeSpec spec);

struct PadeResult {
    RatFun value;
    DegreeSpec achieved;
};

/// Pade approximant in E of sum c[j] E^j. On a degenerate system the
/// denominator degree is lowered until a verified approximant exists.
PadeResult pade_from_series(const std::vector<RatFun>& coeffs, DegreeSpec spec);

/// First n coefficients of the expansion of f at E = 0.
std::vector<RatFun> expand_in_E(const RatFun& f, std::size_t n);

} // namespace specpot
