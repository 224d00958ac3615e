#pragma once

#include <string>

#include "specpot/algebra/poly.hpp"

namespace specpot {

/// Reduced fraction num/den of polynomials over Q. The denominator has
/// integer coefficients with gcd 1 and a positive leading coefficient, so two
/// RatFun values are equal exactly when their stored parts are equal.
class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(const Rational& c) : num_(c), den_(1) {}
    RatFun(long c) : RatFun(Rational(c)) {}
    RatFun(Poly p);
    RatFun(Poly num, Poly den);

    static RatFun variable(Var v) { return RatFun(Poly::variable(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant function.
    Rational constant_value() const;
    VarMask support() const { return num_.support() | den_.support(); }
    bool contains(Var v) const { return (support() & mask_of(v)) != 0; }

    RatFun operator-() const;
    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun x, const RatFun& y) { return x += y; }
    friend RatFun operator-(RatFun x, const RatFun& y) { return x -= y; }
    friend RatFun operator*(RatFun x, const RatFun& y) { return x *= y; }
    friend RatFun operator/(RatFun x, const RatFun& y) { return x /= y; }
    friend bool operator==(const RatFun& x, const RatFun& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }

    RatFun inverse() const;
    RatFun derivative(Var v) const;

    /// Throws PoleAtPoint when the reduced denominator vanishes identically.
    RatFun substitute(Var v, const Rational& x) const;
    RatFun substitute(Var v, const RatFun& f) const;
    RatFun eval_nu(const Rational& nu) const { return substitute(Var::nu, nu); }

    /// All variables in the support must be assigned; throws PoleAtPoint.
    Rational evaluate(const std::array<Rational, kVarCount>& point) const;

    std::string to_string() const;

private:
    struct Raw {};
    RatFun(Poly num, Poly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void fix_sign();

    Poly num_;
    Poly den_;
};

/// Coefficient-field elements share the representation; they simply avoid z and E.
using CoeffField = RatFun;

RatFun pow(const RatFun& f, long e);

/// Canonical representative of num/den; throws ZeroDenominator.
RatFun normalize(const Poly& num, const Poly& den);

} // namespace specpot
