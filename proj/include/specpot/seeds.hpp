#pragma once

#include <optional>

#include "specpot/algebra/ratfun.hpp"

namespace specpot {

/// Y(z) = z^z_power * e^carrier * poly(z).
struct HyperexpSeed {
    CoeffField z_power;
    RatFun carrier;
    RatFun poly;

    /// -Y'/Y.
    RatFun gauge() const;
};

struct NodeSpec1 {
    unsigned k = 0;
    int eps1 = 1;
    int eps2 = 1;
    friend bool operator==(const NodeSpec1&, const NodeSpec1&) = default;
};

struct NodeSpec2 {
    unsigned k = 0;
    int eps = 1;
    friend bool operator==(const NodeSpec2&, const NodeSpec2&) = default;
};

struct Seed {
    CoeffField energy;
    RatFun M;
    HyperexpSeed Y;
};

/// Terminating 1F1(-k; b; x) = sum_j (-k)_j / ((b)_j j!) x^j. When some (b)_j
/// vanishes the regularized (b)_k * 1F1 is returned instead.
RatFun f1f1(unsigned k, const CoeffField& b, const RatFun& x);
/// 1F1(-k; b; scale * z^2).
RatFun f1f1_poly(unsigned k, const CoeffField& b, int scale);
/// sum_j (-k)_j (b+j)_{k-j} / j! x^j, finite for every b.
RatFun f1f1_regularized(unsigned k, const CoeffField& b, const RatFun& x);

CoeffField energy_case1(const NodeSpec1& node, const CoeffField& nu);
CoeffField energy_case2(const NodeSpec2& node, const CoeffField& nu);

/// z^2 Y'' - z Y' - (z^4 - E0 z^2 + 4 nu^2 - 1) Y = 0 with
/// Y = z^(2 e1 e2 nu + 1) e^(-e1 z^2 / 2) 1F1(-k, 2 e1 e2 nu + 1, e1 z^2).
Seed seed_case1(const NodeSpec1& node, const CoeffField& nu = RatFun::variable(Var::nu));
/// 4 z^2 Y'' + (4 E0 z^2 + 4 z - 4 nu^2 + 1) Y = 0 with
/// Y = z^(eps nu + 1/2) e^(-z/m) 1F1(-k, 2 eps nu + 1, 2z/m), m = 2 eps nu + 2k + 1.
Seed seed_case2(const NodeSpec2& node, const CoeffField& nu = RatFun::variable(Var::nu));

/// Left side of the degenerate equation of case 1 or 2, written for Y = exp(-int M),
/// at energy E0. Zero exactly when M is the log-derivative of a solution.
RatFun degenerate_residual(int which, const RatFun& M, const CoeffField& E0, const CoeffField& nu);

/// W(Y1, Y2) / (Y1 Y2) for Y1 = exp(-int M1), Y2 = exp(-int M2).
RatFun wronskian_ratio(const RatFun& M1, const RatFun& M2);

/// Rational R with (R z^a e^q)' = p z^a e^q, or nullopt when no such R
/// exists in the bounded ansatz (non-elementary).
std::optional<RatFun> hyperexp_integrate(const RatFun& p, const RatFun& q, const CoeffField& a);

/// First-order correction M1 of the gauge at a double root, for
/// 2 e1 e2 nu + k >= 0 integral; nullopt when it is not rational.
std::optional<RatFun> double_root_correction(const NodeSpec1& node, const Rational& nu);

/// sum_n v_{n,k} e1^n (b)_{n+1} - e1 e2 2 nu k! / (b+1)_k with b = 2 e1 e2 nu,
/// v_{n,k} the coefficients of 1F1(-k, b+1, e1 z)^2.
CoeffField gamma_sum_check(unsigned k, const CoeffField& nu, int eps1 = 1, int eps2 = 1);
/// Rational overload; throws SingularParameter when 2 nu is an integer.
Rational gamma_sum_check(unsigned k, const Rational& nu);

/// Residue at 0 of z/Y^2 (int Y^2/z)^2 with Y = z^(p-k+1) e^(-z^2/2) 1F1(-k, p-k+1, z^2),
/// computed from the exact antiderivative and a Laurent expansion. Requires p >= k.
Rational residue_pairing(unsigned p, unsigned k);
/// k! (p-k)!^2 / (4 p!) for p >= k; k! / ((k-p-1)!^2 p!) for p < k.
Rational residue_closed_form(unsigned p, unsigned k);

} // namespace specpot
