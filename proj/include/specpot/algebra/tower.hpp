#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specpot/algebra/ratfun.hpp"

namespace specpot {

/// Quadratic generators of the tower: r^2 = z, gamma^2 = -E, s^2 = z + E, i^2 = -1.
enum class Gen : std::uint8_t { r = 1, gamma = 2, s = 4, i = 8 };
using GenMask = std::uint8_t;
inline constexpr GenMask gen_bit(Gen g) { return static_cast<GenMask>(g); }
inline constexpr std::array<Gen, 4> kAllGens = {Gen::r, Gen::gamma, Gen::s, Gen::i};

/// Monomial L^log * (product of generators in mask); L = ln z.
struct TowerKey {
    unsigned log = 0;
    GenMask mask = 0;
    auto operator<=>(const TowerKey&) const = default;
};

/// Finite sum of RatFun multiples of tower monomials, times one optional
/// exponential carrier e^q. A zero carrier means no exponential factor.
class TowerElem {
public:
    TowerElem() = default;
    TowerElem(RatFun c);
    TowerElem(const Rational& c) : TowerElem(RatFun(c)) {}
    TowerElem(long c) : TowerElem(RatFun(c)) {}

    static TowerElem generator(Gen g);
    static TowerElem log_z();
    static TowerElem monomial(TowerKey key, RatFun coef);
    static TowerElem exp(RatFun q);

    const std::map<TowerKey, RatFun>& terms() const { return terms_; }
    const RatFun& carrier() const { return carrier_; }
    RatFun coefficient(TowerKey key) const;

    bool is_zero() const { return terms_.empty(); }
    /// No L, no generators, no carrier.
    bool is_rational() const;
    /// Throws NonRationalCoefficient unless is_rational().
    RatFun as_rational() const;
    bool has_log() const;
    GenMask generators() const;
    unsigned log_degree() const;

    TowerElem operator-() const;
    TowerElem& operator+=(const TowerElem& o);
    TowerElem& operator-=(const TowerElem& o);
    friend TowerElem operator+(TowerElem x, const TowerElem& y) { return x += y; }
    friend TowerElem operator-(TowerElem x, const TowerElem& y) { return x -= y; }
    friend TowerElem operator*(const TowerElem& x, const TowerElem& y);
    friend bool operator==(const TowerElem& x, const TowerElem& y) {
        return x.terms_ == y.terms_ && (x.is_zero() || x.carrier_ == y.carrier_);
    }

    TowerElem scaled(const RatFun& c) const;
    /// Drops the carrier.
    TowerElem without_carrier() const;
    TowerElem with_carrier(RatFun q) const;

    /// Derivation in z or E.
    TowerElem derivative(Var v) const;
    /// Requires an L-free element; throws NotInvertible otherwise.
    TowerElem inverse() const;
    /// Flips the sign of generator g.
    TowerElem conjugate(Gen g) const;

    TowerElem map_coefficients(const std::function<RatFun(const RatFun&)>& f) const;
    TowerElem eval_nu(const Rational& nu) const;

private:
    void add_term(TowerKey key, RatFun c);

    std::map<TowerKey, RatFun> terms_;
    RatFun carrier_;
};

TowerElem operator/(const TowerElem& x, const TowerElem& y);

/// Square of a generator as a rational function.
RatFun generator_square(Gen g);
/// g'/g for differentiation in v.
RatFun generator_log_derivative(Gen g, Var v);

/// Truncated power series in E with TowerElem coefficients: c[j] multiplies E^j.
class ESeries {
public:
    explicit ESeries(std::vector<TowerElem> coeffs) : c_(std::move(coeffs)) {}

    std::size_t order() const { return c_.size(); }
    const std::vector<TowerElem>& coefficients() const { return c_; }
    const TowerElem& operator[](std::size_t j) const { return c_[j]; }

    friend ESeries operator+(const ESeries& x, const ESeries& y);
    friend ESeries operator*(const ESeries& x, const ESeries& y);
    /// Throws ZeroLeadingCoefficient when c[0] = 0.
    ESeries inverse() const;
    /// Coefficientwise d/dz.
    ESeries derivative_z() const;
    /// -Y'/Y.
    ESeries log_derivative() const;
    /// Coefficients as RatFun; throws NonRationalCoefficient.
    std::vector<RatFun> rational_coefficients() const;

private:
    std::vector<TowerElem> c_;
};

/// -Y'/Y demoted to rational coefficients.
std::vector<RatFun> series_log_derivative(const ESeries& y);

} // namespace specpot
