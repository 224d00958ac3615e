#pragma once

#include <random>

#include "specpot/algebra/tower.hpp"

namespace specpot::test {

inline RatFun var(Var v) { return RatFun::variable(v); }
inline const RatFun z = RatFun::variable(Var::z);
inline const RatFun E = RatFun::variable(Var::E);
inline const RatFun nu = RatFun::variable(Var::nu);
inline const RatFun a = RatFun::variable(Var::a);
inline const RatFun b = RatFun::variable(Var::b);
inline const RatFun c = RatFun::variable(Var::c);
inline const RatFun d = RatFun::variable(Var::d);
inline const RatFun t = RatFun::variable(Var::t);

inline RatFun q(long n, long m = 1) { return RatFun(make_rational(n, m)); }

class Random {
public:
    explicit Random(unsigned seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
    Rational rational(long span = 9, long max_den = 6) {
        return make_rational(integer(-span, span), integer(1, max_den));
    }
    Rational nonzero_rational(long span = 9, long max_den = 6) {
        Rational r;
        do r = rational(span, max_den);
        while (r == 0);
        return r;
    }
    /// Random polynomial in the given variables with small degree and coefficients.
    Poly poly(std::initializer_list<Var> vars, unsigned max_deg = 2, int terms = 3) {
        Poly out;
        for (int i = 0; i < terms; ++i) {
            Poly m(rational());
            for (Var v : vars) m *= Poly::variable(v, static_cast<unsigned>(integer(0, max_deg)));
            out += m;
        }
        return out;
    }
    RatFun ratfun(std::initializer_list<Var> vars) {
        Poly den;
        do den = poly(vars, 2, 2) + Poly(nonzero_rational());
        while (den.is_zero());
        return RatFun(poly(vars), den);
    }
    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

} // namespace specpot::test
