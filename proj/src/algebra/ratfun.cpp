#include "specpot/algebra/ratfun.hpp"

#include <bit>

#include "specpot/error.hpp"

namespace specpot {

RatFun::RatFun(Poly p) : num_(std::move(p)), den_(1) {}

RatFun::RatFun(Poly num, Poly den) {
    if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = gcd(num, den);
    if (!g.is_constant()) {
        num = num.exact_quotient(g);
        den = den.exact_quotient(g);
    }
    num_ = std::move(num);
    den_ = std::move(den);
    fix_sign();
}

void RatFun::fix_sign() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Rational c = den_.content();
    if (sgn(den_.leading_coefficient()) < 0) c = -c;
    if (c != 1) {
        Rational inv = 1 / c;
        den_ *= inv;
        num_ *= inv;
    }
}

RatFun normalize(const Poly& num, const Poly& den) { return RatFun(num, den); }

Rational RatFun::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value of non-constant function");
    return num_.constant_term() / den_.constant_term();
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Raw{}); }

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        Poly n = num_ + o.num_;
        if (den_.is_constant()) {
            *this = RatFun(std::move(n), den_, Raw{});
            fix_sign();
            return *this;
        }
        return *this = RatFun(std::move(n), den_);
    }
    if (den_.is_constant() || o.den_.is_constant()) {
        Poly n = num_ * o.den_ + o.num_ * den_;
        Poly d = den_ * o.den_;
        if (den_.is_constant() && o.den_.is_constant()) {
            *this = RatFun(std::move(n), std::move(d), Raw{});
            fix_sign();
            return *this;
        }
        return *this = RatFun(std::move(n), std::move(d));
    }
    Poly g = gcd(den_, o.den_);
    Poly b1 = den_.exact_quotient(g);
    Poly d1 = o.den_.exact_quotient(g);
    Poly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) return *this = RatFun();
    Poly g2 = g.is_constant() ? Poly(1) : gcd(n, g);
    if (!g2.is_constant()) {
        n = n.exact_quotient(g2);
        g = g.exact_quotient(g2);
    }
    *this = RatFun(std::move(n), b1 * d1 * g, Raw{});
    fix_sign();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) return *this = RatFun();
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_constant()) {
        Poly g1 = gcd(a, d);
        if (!g1.is_constant()) {
            a = a.exact_quotient(g1);
            d = d.exact_quotient(g1);
        }
    }
    if (!b.is_constant()) {
        Poly g2 = gcd(c, b);
        if (!g2.is_constant()) {
            c = c.exact_quotient(g2);
            b = b.exact_quotient(g2);
        }
    }
    *this = RatFun(a * c, b * d, Raw{});
    fix_sign();
    return *this;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    RatFun r(den_, num_, Raw{});
    r.fix_sign();
    return r;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun pow(const RatFun& f, long e) {
    if (e < 0) return pow(f.inverse(), -e);
    return RatFun(pow(f.num(), static_cast<unsigned>(e)), pow(f.den(), static_cast<unsigned>(e)));
}

RatFun RatFun::derivative(Var v) const {
    if (!num_.contains(v) && !den_.contains(v)) return RatFun();
    if (!den_.contains(v)) return RatFun(num_.derivative(v), den_);
    return RatFun(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFun RatFun::substitute(Var v, const Rational& x) const {
    if (!contains(v)) return *this;
    Poly d = den_.substitute(v, x);
    if (d.is_zero()) throw PoleAtPoint(std::string(var_name(v)) + " = " + specpot::to_string(x));
    return RatFun(num_.substitute(v, x), std::move(d));
}

RatFun RatFun::substitute(Var v, const RatFun& f) const {
    if (!contains(v)) return *this;
    auto homogenize = [&](const Poly& p, unsigned deg) {
        auto cs = p.coefficients(v);
        Poly out;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].is_zero()) continue;
            out += cs[i] * pow(f.num(), static_cast<unsigned>(i)) *
                   pow(f.den(), deg - static_cast<unsigned>(i));
        }
        return out;
    };
    unsigned dn = num_.degree(v), dd = den_.degree(v);
    Poly n = homogenize(num_, dn), d = homogenize(den_, dd);
    if (d.is_zero()) throw PoleAtPoint("substitution hits a pole");
    if (dd > dn) n = n * pow(f.den(), dd - dn);
    else if (dn > dd) d = d * pow(f.den(), dn - dd);
    return RatFun(std::move(n), std::move(d));
}

Rational RatFun::evaluate(const std::array<Rational, kVarCount>& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw PoleAtPoint("evaluation at a pole");
    return num_.evaluate(point) / d;
}

std::string RatFun::to_string() const {
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string();
    std::string n = num_.size() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
    const Term& t = den_.leading();
    bool bare = den_.size() == 1 && t.coef == 1 && std::popcount(t.mono.support()) == 1;
    return n + "/" + (bare ? den_.to_string() : "(" + den_.to_string() + ")");
}

} // namespace specpot
