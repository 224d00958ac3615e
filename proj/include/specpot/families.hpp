#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specpot/gauge.hpp"
#include "specpot/interp.hpp"
#include "specpot/seeds.hpp"

namespace specpot {

enum class Family { F1, F2, F3log, F3poly, F4, Singular };

std::string family_name(Family f);

/// F(z) = sqrt(z) P1(z^2) + ln z sqrt(z) P2(z^2); P1, P2 are polynomials in t.
struct LogPolyPair {
    Poly P1;
    Poly P2;
};

struct PotentialResult {
    Family family = Family::Singular;
    GaugeCase gauge_case = GaugeCase::C1;
    CoeffField nu;
    Gauge M;                   // nullopt is M = infinity
    std::optional<RatFun> H;   // absent for M = infinity
    std::optional<HStructure> structure;
    RatFun V;

    std::vector<NodeSpec1> nodes1;
    std::vector<NodeSpec2> nodes2;
    std::optional<LogPolyPair> log_pair;
    std::optional<Poly> F;
};

/// Checks the Schroedinger residual of the stored V against the stored gauge
/// (NonzeroResidual with a witness coordinate) and re-derives H and its structure.
void verify(const PotentialResult& r);

PotentialResult gen_family1(const std::vector<NodeSpec1>& nodes, const CoeffField& nu);
PotentialResult gen_family2(const std::vector<NodeSpec2>& nodes, const CoeffField& nu);
/// Numeric nu: direct when the node energies stay distinct at nu, otherwise
/// through symbolic nu followed by eval_nu. Three coinciding energies throw
/// CoincidentNodes.
PotentialResult gen_family1(const std::vector<NodeSpec1>& nodes, const Rational& nu);
PotentialResult gen_family2(const std::vector<NodeSpec2>& nodes, const Rational& nu);

/// Interpolation through arbitrary (energy, gauge) samples with case-1 data.
PotentialResult gen_family1_raw(const std::vector<InterpNode>& nodes, const CoeffField& nu);

/// Action of D = -d^2/dz^2 - 1/(4 z^2) on sqrt(z) (P1 + ln z P2).
LogPolyPair apply_D(const LogPolyPair& f);
/// sqrt(z) (P1(z^2) + ln z P2(z^2)) as a tower element.
TowerElem to_tower(const LogPolyPair& f);

/// E-series sum_j D^{n-1-j} F E^j with n = deg P1 + 1.
ESeries family3_log_series(const LogPolyPair& f);
/// E-series sum_j (-1)^{n-1-j} F^{(2(n-1-j))} E^j with n = floor(deg F / 2) + 1.
ESeries family3_poly_series(const Poly& F);

PotentialResult gen_family3_log(const LogPolyPair& f);
PotentialResult gen_family3_poly(const Poly& F, std::optional<unsigned> n = std::nullopt);
PotentialResult gen_family4();
PotentialResult singular_potential(GaugeCase c, const CoeffField& nu);

/// Substitutes nu = nu0 in the gauge and rebuilds H, V and the w-roots.
PotentialResult eval_nu(const PotentialResult& r, const Rational& nu0);

} // namespace specpot
