#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "specpot/algebra/ratfun.hpp"

namespace specpot {

/// Dense univariate polynomial over a field T (Rational or RatFun); c[i]
/// multiplies x^i and the leading entry is nonzero.
template <class T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    UPoly(const T& constant) : c_{constant} { trim(); }

    /// Coefficients of p in v, each mapped into T.
    static UPoly from_poly(const Poly& p, Var v) {
        std::vector<T> c;
        for (const auto& coef : p.coefficients(v)) c.push_back(lift(coef));
        return UPoly(std::move(c));
    }
    Poly to_poly(Var v) const {
        Poly out;
        for (std::size_t i = 0; i < c_.size(); ++i) out += lower(c_[i]) * Poly::variable(v, static_cast<unsigned>(i));
        return out;
    }

    const std::vector<T>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const T& lead() const { return c_.back(); }
    T coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

    friend UPoly operator+(const UPoly& x, const UPoly& y) {
        std::vector<T> c(std::max(x.c_.size(), y.c_.size()), T(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i) c[i] = c[i] + x.c_[i];
        for (std::size_t i = 0; i < y.c_.size(); ++i) c[i] = c[i] + y.c_[i];
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& x) {
        std::vector<T> c;
        for (const auto& v : x.c_) c.push_back(-v);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& x, const UPoly& y) { return x + (-y); }
    friend UPoly operator*(const UPoly& x, const UPoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<T> c(x.c_.size() + y.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < x.c_.size(); ++i)
            for (std::size_t j = 0; j < y.c_.size(); ++j) c[i + j] = c[i + j] + x.c_[i] * y.c_[j];
        return UPoly(std::move(c));
    }
    friend bool operator==(const UPoly& x, const UPoly& y) { return x.c_ == y.c_; }

    /// (quotient, remainder)
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        std::vector<T> r = c_;
        int dd = d.degree();
        if (degree() < dd) return {UPoly(), *this};
        std::vector<T> q(static_cast<std::size_t>(degree() - dd + 1), T(0));
        T inv = T(1) / d.lead();
        for (int i = degree(); i >= dd; --i) {
            T f = r[static_cast<std::size_t>(i)] * inv;
            q[static_cast<std::size_t>(i - dd)] = f;
            for (int j = 0; j <= dd; ++j)
                r[static_cast<std::size_t>(i - dd + j)] = r[static_cast<std::size_t>(i - dd + j)] - f * d.c_[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(dd));
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    UPoly derivative() const {
        std::vector<T> c;
        for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * T(static_cast<long>(i)));
        return UPoly(std::move(c));
    }
    UPoly monic() const {
        if (is_zero()) return {};
        T inv = T(1) / lead();
        std::vector<T> c;
        for (const auto& v : c_) c.push_back(v * inv);
        return UPoly(std::move(c));
    }
    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    static T lift(const Poly& p);
    static Poly lower(const T& t);
    static bool zero(const T& t);
    void trim() {
        while (!c_.empty() && zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <>
inline Rational UPoly<Rational>::lift(const Poly& p) {
    if (!p.is_constant()) throw std::logic_error("non-constant coefficient in a rational univariate polynomial");
    return p.constant_term();
}
template <>
inline Poly UPoly<Rational>::lower(const Rational& t) { return Poly(t); }
template <>
inline bool UPoly<Rational>::zero(const Rational& t) { return t == 0; }
template <>
inline RatFun UPoly<RatFun>::lift(const Poly& p) { return RatFun(p); }
template <>
inline Poly UPoly<RatFun>::lower(const RatFun& t) {
    if (!t.is_polynomial()) throw std::logic_error("coefficient with a denominator");
    return t.num() * (Rational(1) / t.den().constant_term());
}
template <>
inline bool UPoly<RatFun>::zero(const RatFun& t) { return t.is_zero(); }

template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
    while (!b.is_zero()) {
        UPoly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// s with s * a = 1 mod m; a and m coprime.
template <class T>
UPoly<T> inverse_mod(const UPoly<T>& a, const UPoly<T>& m) {
    UPoly<T> r0 = m, r1 = a % m, s0, s1(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly<T> s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw std::logic_error("inverse_mod of non-coprime polynomials");
    return s0 * UPoly<T>(T(1) / r0.lead());
}

using QPoly = UPoly<Rational>;

/// Number of distinct real roots of p in the open interval (lo, hi); an
/// absent bound means the corresponding infinity. p must not vanish at finite bounds.
int count_real_roots(const QPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

} // namespace specpot
