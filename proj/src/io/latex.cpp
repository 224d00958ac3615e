#include "specpot/io/latex.hpp"

#include "specpot/algebra/upoly.hpp"

namespace specpot {

namespace {

using RPoly = UPoly<RatFun>;

constexpr std::array<Var, kVarCount> kPrintOrder = {Var::E, Var::nu, Var::a, Var::b,
                                                    Var::c, Var::d,  Var::t, Var::z};

std::string var_latex(Var v) { return v == Var::nu ? "\\nu " : std::string(var_name(v)); }

std::string exponent(unsigned e) {
    if (e == 1) return "";
    return e > 9 ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
}

std::string monomial_latex(Monomial m) {
    std::string out;
    for (Var v : kPrintOrder)
        if (unsigned e = m.exponent(v)) out += var_latex(v) + exponent(e);
    return out;
}

std::string rational_latex(const Rational& c) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

/// Signed term list; first term carries a sign only when negative.
std::string terms_latex(const Poly& p, bool leading_plus) {
    if (p.is_zero()) return leading_plus ? "+0" : "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rational c = t.coef;
        if (sgn(c) < 0) {
            out += "-";
            c = -c;
        } else if (!first || leading_plus) {
            out += "+";
        }
        first = false;
        if (t.mono.is_one()) out += rational_latex(c);
        else out += (c == 1 ? "" : rational_latex(c)) + monomial_latex(t.mono);
    }
    return out;
}

/// s * c * P with c > 0 rational and P primitive with positive leading coefficient.
struct Scaled {
    int sign;
    Rational c;
    Poly P;
};

Scaled split(const Poly& p) {
    Rational c = p.content();
    Poly P = p * (1 / c);
    int s = sgn(P.leading_coefficient());
    if (s < 0) P = -P;
    return {s, c, P};
}

std::string factor(const Poly& p, bool alone) {
    if (p.size() == 1 || alone) return latex_poly(p);
    return "(" + latex_poly(p) + ")";
}

std::string numerator(const Rational& n, const Poly& P) {
    std::string k = n.get_str();
    if (P == Poly(1)) return k;
    if (P.size() == 1) return (n == 1 ? "" : k) + latex_poly(P);
    return n == 1 ? latex_poly(P) : k + "(" + latex_poly(P) + ")";
}

/// (sign, body) of num / (den * f^j) where den is free of z.
std::pair<int, std::string> fraction(const Poly& num, const Poly& den, const Poly& f, unsigned j) {
    Scaled a = split(num);
    Scaled b = split(den);
    Rational ratio = a.c / b.c;
    std::string top = numerator(ratio.get_num(), a.P);
    std::string bottom;
    if (ratio.get_den() != 1) bottom += ratio.get_den().get_str();
    if (!(b.P == Poly(1))) bottom += factor(b.P, bottom.empty() && f == Poly(1));
    if (!(f == Poly(1))) {
        bool bare = f.size() == 1;
        if (j > 1) bottom += (bare ? latex_poly(f) : "(" + latex_poly(f) + ")") + exponent(j);
        else bottom += factor(f, bottom.empty());
    }
    if (bottom.empty()) return {a.sign * b.sign, top};
    return {a.sign * b.sign, "\\frac{" + top + "}{" + bottom + "}"};
}

RatFun to_ratfun(const RPoly& p) {
    RatFun out;
    RatFun zk(1);
    for (const auto& c : p.coefficients()) {
        out += c * zk;
        zk *= RatFun::variable(Var::z);
    }
    return out;
}

void append(std::string& out, std::pair<int, std::string> term) {
    if (term.first < 0) out += "-";
    else if (!out.empty()) out += "+";
    out += term.second;
}

} // namespace

std::string latex_poly(const Poly& p) { return terms_latex(p, false); }

std::string latex_ratfun(const RatFun& f) {
    if (f.is_polynomial()) {
        if (f.den().constant_term() == 1) return latex_poly(f.num());
    }
    std::string out;
    append(out, fraction(f.num(), f.den(), Poly(1), 1));
    return out;
}

std::string latex_partial_fractions(const RatFun& V) {
    if (V.is_zero()) return "0";
    if (!V.den().contains(Var::z)) return latex_ratfun(V);

    std::vector<std::pair<Poly, unsigned>> factors;   // z first
    std::vector<std::pair<Poly, unsigned>> others;
    auto sqf = squarefree_decomposition(V.den(), Var::z);
    for (std::size_t i = 0; i < sqf.size(); ++i) {
        Poly f = sqf[i];
        if (!f.contains(Var::z)) continue;
        unsigned m = static_cast<unsigned>(i + 1);
        if (f.min_degree(Var::z) > 0) {
            factors.emplace_back(Poly::variable(Var::z), m);
            f = f.exact_quotient(Poly::variable(Var::z));
        }
        if (f.contains(Var::z)) others.emplace_back(f.primitive(), m);
    }
    factors.insert(factors.end(), others.begin(), others.end());

    RPoly N = RPoly::from_poly(V.num(), Var::z);
    RPoly D = RPoly::from_poly(V.den(), Var::z);
    auto [Q, R] = N.divmod(D);

    std::string out;
    RatFun q = to_ratfun(Q);
    if (!q.is_zero()) {
        if (q.is_polynomial() && q.den().constant_term() == 1) out = terms_latex(q.num(), false);
        else append(out, fraction(q.num(), q.den(), Poly(1), 1));
    }
    for (const auto& [f, m] : factors) {
        RPoly fu = RPoly::from_poly(f, Var::z);
        RPoly F(RatFun(1));
        for (unsigned i = 0; i < m; ++i) F = F * fu;
        RPoly G = D.divmod(F).first;
        RPoly A = (R * inverse_mod(G % F, F)) % F;
        std::vector<RPoly> digits;
        for (unsigned k = 0; k < m; ++k) {
            auto [quot, rem] = A.divmod(fu);
            digits.push_back(rem);
            A = quot;
        }
        for (unsigned j = 1; j <= m; ++j) {
            RatFun a = to_ratfun(digits[m - j]);
            if (a.is_zero()) continue;
            append(out, fraction(a.num(), a.den(), f, j));
        }
    }
    return out;
}

std::string latex_potential(const RatFun& V) { return "V(z)=" + latex_partial_fractions(V); }

} // namespace specpot
