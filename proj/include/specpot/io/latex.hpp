#pragma once

#include <string>

#include "specpot/algebra/ratfun.hpp"

namespace specpot {

/// Implicit-product LaTeX for a polynomial, e.g. "2Ez^2+Eb-2".
std::string latex_poly(const Poly& p);

/// \frac{...}{...} with the rational content moved into integer factors and
/// a negative sign pulled in front.
std::string latex_ratfun(const RatFun& f);

/// Partial-fraction form in z over the parameter field: polynomial part,
/// then the z-pole terms, then the other factors by increasing power.
std::string latex_partial_fractions(const RatFun& V);

/// "V(z)=" followed by latex_partial_fractions(V).
std::string latex_potential(const RatFun& V);

} // namespace specpot
