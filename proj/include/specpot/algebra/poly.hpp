#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specpot/algebra/rational.hpp"

namespace specpot {

/// Indeterminates known to the kernel. z and E are the space and spectral
/// variables; nu, a, b, c, d are formal parameters of the coefficient field;
/// t stands for z^2 in log-polynomial inputs.
enum class Var : std::uint8_t { z = 0, E, nu, a, b, c, d, t };

inline constexpr int kVarCount = 8;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::z, Var::E,  Var::nu, Var::a,
                                                        Var::b, Var::c, Var::d,  Var::t};

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

/// Bit set over Var.
using VarMask = std::uint8_t;
inline constexpr VarMask mask_of(Var v) { return static_cast<VarMask>(1u << static_cast<int>(v)); }
inline constexpr VarMask kParameterMask =
    mask_of(Var::nu) | mask_of(Var::a) | mask_of(Var::b) | mask_of(Var::c) | mask_of(Var::d);

/// Exponent vector packed one byte per variable, z in the most significant
/// byte, so integer comparison is the lexicographic order z > E > nu > ... > t.
class Monomial {
public:
    constexpr Monomial() = default;

    static Monomial power(Var v, unsigned e);

    unsigned exponent(Var v) const {
        return static_cast<unsigned>((bits_ >> shift(v)) & 0xffu);
    }
    Monomial with_exponent(Var v, unsigned e) const;
    unsigned total_degree() const;
    bool is_one() const { return bits_ == 0; }
    VarMask support() const;

    bool divides(Monomial other) const;
    Monomial operator*(Monomial other) const;
    /// Requires divides(): quotient other / *this is not checked.
    Monomial operator/(Monomial other) const;
    static Monomial gcd(Monomial x, Monomial y);

    std::uint64_t bits() const { return bits_; }
    auto operator<=>(const Monomial&) const = default;

private:
    explicit constexpr Monomial(std::uint64_t bits) : bits_(bits) {}
    static constexpr int shift(Var v) { return (7 - static_cast<int>(v)) * 8; }

    std::uint64_t bits_ = 0;
};

struct Term {
    Monomial mono;
    Rational coef;
};

/// Sparse multivariate polynomial over Q. Terms are kept strictly decreasing
/// in Monomial order with no zero coefficients, so equality is structural.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);
    Poly(long c) : Poly(Rational(c)) {}

    static Poly variable(Var v, unsigned e = 1);
    static Poly monomial(Monomial m, const Rational& c);
    /// Sorts and combines arbitrary terms.
    static Poly from_terms(std::vector<Term> terms);
    /// sum_i coeffs[i] * v^i
    static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    /// Coefficient of the monomial 1.
    Rational constant_term() const;
    const Term& leading() const { return terms_.front(); }
    const Rational& leading_coefficient() const { return terms_.front().coef; }

    unsigned degree(Var v) const;
    unsigned min_degree(Var v) const;
    unsigned total_degree() const;
    VarMask support() const;
    bool contains(Var v) const { return (support() & mask_of(v)) != 0; }
    /// Exponent-wise minimum over all terms.
    Monomial monomial_content() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    friend Poly operator*(const Poly& x, const Poly& y);
    friend Poly operator*(Poly x, const Rational& c) { return x *= c; }
    friend Poly operator*(Poly x, long c) { return x *= Rational(c); }
    friend Poly operator*(long c, Poly x) { return x *= Rational(c); }
    friend bool operator==(const Poly& x, const Poly& y);

    Poly shifted(Monomial m) const;
    Poly derivative(Var v) const;
    Poly substitute(Var v, const Rational& x) const;
    Poly substitute(Var v, const Poly& p) const;
    /// Index i holds the coefficient of v^i (a polynomial free of v).
    std::vector<Poly> coefficients(Var v) const;
    Rational coefficient(Monomial m) const;

    /// Positive rational c with (*this)/c integral and primitive.
    Rational content() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    Poly primitive() const;

    std::optional<Poly> divide_exact(const Poly& d) const;
    /// Throws if d does not divide *this.
    Poly exact_quotient(const Poly& d) const;

    /// All variables must be assigned.
    Rational evaluate(const std::array<Rational, kVarCount>& point) const;

    /// Expression-syntax print in Monomial order, e.g. "z^4+a*z^3-3/4*nu".
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

Poly pow(const Poly& p, unsigned e);

/// Greatest common divisor over Q, normalized with Poly::primitive().
Poly gcd(const Poly& x, const Poly& y);

/// gcd of the coefficients of p as a polynomial in v; 1 for constants in v.
Poly content_in(const Poly& p, Var v);

/// Square-free decomposition with respect to v over Q(other variables):
/// returns factors f_1, f_2, ... with p ~ content * prod f_i^i.
std::vector<Poly> squarefree_decomposition(const Poly& p, Var v);

std::string monomial_to_string(Monomial m);

} // namespace specpot
