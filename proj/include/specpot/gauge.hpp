#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "specpot/algebra/tower.hpp"

namespace specpot {

/// The four eigenfunction shapes: Whittaker pullbacks by z^2 (C1), 2 gamma z
/// (C2, Coulomb-type mu = 1/(2 gamma)), 2 gamma z with mu = 0 (C3), and the
/// Airy-type pullback (4i/3) s^3 with nu = 1/3 (C4).
enum class GaugeCase { C1 = 1, C2 = 2, C3 = 3, C4 = 4 };

/// A gauge: a rational function, or the distinguished value infinity.
using Gauge = std::optional<RatFun>;

/// Expression under the square root of the eigenfunction denominator.
RatFun H_of(GaugeCase c, const RatFun& M, const CoeffField& nu);

/// Coordinates of a * W(f) + b * W'(f).
struct WPair {
    TowerElem a;
    TowerElem b;
};

/// Pullback data of a case: f', and c(f) = 1/4 - mu/f - (1/4 - nu^2)/f^2.
struct Pullback {
    TowerElem df;
    TowerElem c;
};
Pullback pullback(GaugeCase c, const CoeffField& nu);

/// d/dz of g * (a W + b W') divided by g, where g'/g = ell.
WPair differentiate(const WPair& p, const Pullback& pb, const RatFun& ell);

/// psi / g and g'/g for the eigenfunction built from M.
std::pair<WPair, RatFun> eigenfunction(GaugeCase c, const Gauge& M, const CoeffField& nu);

/// Potential V with -psi''/psi = V + E. Throws EDependentPotential when the
/// quotient still involves E (or gamma, s, i), InconsistentRatio when the two
/// coordinates disagree.
RatFun V_of(GaugeCase c, const Gauge& M, const CoeffField& nu);

/// psi'' + (V + E) psi in W/W' coordinates; nullopt when identically zero,
/// otherwise the first nonzero coordinate.
std::optional<TowerElem> ode_residual_generic(GaugeCase c, const Gauge& M, const RatFun& V,
                                              const CoeffField& nu);

struct WRoot {
    CoeffField value;
    unsigned multiplicity = 1;
};

struct HStructure {
    Poly w;                 // pure-E factor of the numerator
    Poly P;                 // pure-z factor of the numerator
    RatFun Q;               // H = w P / Q
    std::vector<WRoot> roots;
    /// Squarefree factors of w that did not split into known linear factors.
    std::vector<std::pair<Poly, unsigned>> unresolved;
};

/// Splits H = w(E) P(z) / Q(z, E). Throws MixedFactor when the numerator has a
/// factor involving both z and E, DegreeBoundViolated when
/// deg_E w < deg_E num M + deg_E den M + 1. Candidate energies help split w.
HStructure check_H_structure(const RatFun& H, const RatFun& M,
                             const std::vector<CoeffField>& candidates = {});

} // namespace specpot
