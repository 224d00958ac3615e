#include "specpot/gauge.hpp"

#include "specpot/error.hpp"

namespace specpot {

namespace {

RatFun zv() { return RatFun::variable(Var::z); }
RatFun ev() { return RatFun::variable(Var::E); }
RatFun q(long p, long d = 1) { return RatFun(Rational(p, d)); }

// Candidate rational roots of a univariate integer polynomial in E.
std::vector<Rational> rational_roots(const Poly& f) {
    std::vector<Rational> out;
    Poly g = f.primitive();
    auto cs = g.coefficients(Var::E);
    unsigned low = 0;
    while (low < cs.size() && cs[low].is_zero()) ++low;
    if (low > 0) out.push_back(0);
    if (low >= cs.size() - 1) return out;
    Integer a0 = abs(cs[low].constant_term().get_num());
    Integer an = abs(cs.back().constant_term().get_num());
    auto divisors = [](Integer n) {
        std::vector<Integer> d;
        if (n > Integer(1000000000)) return d;
        for (Integer i = 1; i * i <= n; ++i) {
            if (n % i == 0) {
                d.push_back(i);
                if (i * i != n) d.push_back(n / i);
            }
        }
        return d;
    };
    for (const auto& p : divisors(a0)) {
        for (const auto& qq : divisors(an)) {
            for (int sign : {1, -1}) {
                Rational r = make_rational(Integer(sign * p), qq);
                if (g.substitute(Var::E, r).is_zero() &&
                    std::find(out.begin(), out.end(), r) == out.end())
                    out.push_back(r);
            }
        }
    }
    return out;
}

Poly linear_factor(const CoeffField& root) {
    // den * E - num, as a polynomial
    return root.den() * Poly::variable(Var::E) - root.num();
}

} // namespace

RatFun H_of(GaugeCase c, const RatFun& M, const CoeffField& nu) {
    RatFun z = zv(), E = ev();
    RatFun dM = M.derivative(Var::z);
    switch (c) {
    case GaugeCase::C1:
        return M * M * z * z + M * z - dM * z * z - pow(z, 4) + z * z * E - q(4) * nu * nu + q(1);
    case GaugeCase::C2:
        return q(4) * M * M * z * z + q(4) * z * z * E - q(4) * dM * z * z - q(4) * nu * nu + q(4) * z + q(1);
    case GaugeCase::C3:
        return q(4) * M * M * z * z + q(4) * z * z * E - q(4) * dM * z * z - q(4) * nu * nu + q(1);
    case GaugeCase::C4:
        return M * M + E - dM + z;
    }
    return {};
}

Pullback pullback(GaugeCase c, const CoeffField& nu) {
    RatFun z = zv(), E = ev();
    RatFun alpha = q(1, 4) - nu * nu;
    switch (c) {
    case GaugeCase::C1:
        return {TowerElem(q(2) * z), TowerElem(q(1, 4) - E / (q(4) * z * z) - alpha / pow(z, 4))};
    case GaugeCase::C2:
        return {TowerElem::generator(Gen::gamma).scaled(q(2)),
                TowerElem(q(1, 4) + (q(1) / (q(4) * E * z)) + alpha / (q(4) * E * z * z))};
    case GaugeCase::C3:
        return {TowerElem::generator(Gen::gamma).scaled(q(2)), TowerElem(q(1, 4) + alpha / (q(4) * E * z * z))};
    case GaugeCase::C4:
        return {(TowerElem::generator(Gen::i) * TowerElem::generator(Gen::s)).scaled(q(2)),
                TowerElem(q(1, 4) + q(5, 64) / pow(z + E, 3))};
    }
    return {};
}

WPair differentiate(const WPair& p, const Pullback& pb, const RatFun& ell) {
    return {p.a.derivative(Var::z) + p.a.scaled(ell) + p.b * pb.df * pb.c,
            p.b.derivative(Var::z) + p.b.scaled(ell) + p.a * pb.df};
}

std::pair<WPair, RatFun> eigenfunction(GaugeCase c, const Gauge& M, const CoeffField& nu) {
    RatFun z = zv(), E = ev();
    if (!M) {
        WPair p{TowerElem(1), TowerElem()};
        switch (c) {
        case GaugeCase::C1: return {p, -q(1) / (q(2) * z)};
        case GaugeCase::C2:
        case GaugeCase::C3: return {p, RatFun()};
        case GaugeCase::C4: return {p, -q(1) / (q(4) * (z + E))};
        }
    }
    RatFun H = H_of(c, *M, nu);
    if (H.is_zero()) throw ZeroDenominator("H vanishes identically");
    RatFun dlogH = H.derivative(Var::z) / (q(2) * H);
    switch (c) {
    case GaugeCase::C1:
        return {{TowerElem(*M / (q(2) * z)), TowerElem(1)}, q(3) / (q(2) * z) - dlogH};
    case GaugeCase::C2:
    case GaugeCase::C3:
        // M / (2 gamma) = -M gamma / (2E)
        return {{TowerElem::generator(Gen::gamma).scaled(-*M / (q(2) * E)), TowerElem(1)},
                q(1) / z - dlogH};
    case GaugeCase::C4: {
        RatFun w = z + E;
        TowerElem is = TowerElem::generator(Gen::i) * TowerElem::generator(Gen::s);
        return {{is.scaled((-*M * w / q(2) + q(1, 8)) / (w * w)), TowerElem(1)}, q(1) / (q(4) * w) - dlogH};
    }
    }
    return {};
}

namespace {

struct Derivatives {
    WPair p0, p2;
};

Derivatives second_derivative(GaugeCase c, const Gauge& M, const CoeffField& nu) {
    auto [p0, ell] = eigenfunction(c, M, nu);
    Pullback pb = pullback(c, nu);
    WPair p1 = differentiate(p0, pb, ell);
    WPair p2 = differentiate(p1, pb, ell);
    return {p0, p2};
}

} // namespace

RatFun V_of(GaugeCase c, const Gauge& M, const CoeffField& nu) {
    auto [p0, p2] = second_derivative(c, M, nu);
    if (!(p2.a * p0.b - p2.b * p0.a).is_zero())
        throw InconsistentRatio("psi'' is not proportional to psi");
    TowerElem x = p0.a.is_zero() ? -(p2.b / p0.b) : -(p2.a / p0.a);
    if (!x.is_rational()) throw EDependentPotential("-psi''/psi involves square roots of E");
    RatFun V = x.as_rational() - ev();
    if (V.contains(Var::E)) throw EDependentPotential("V = " + V.to_string());
    return V;
}

std::optional<TowerElem> ode_residual_generic(GaugeCase c, const Gauge& M, const RatFun& V,
                                              const CoeffField& nu) {
    auto [p0, p2] = second_derivative(c, M, nu);
    RatFun k = V + ev();
    TowerElem ra = p2.a + p0.a.scaled(k);
    if (!ra.is_zero()) return ra;
    TowerElem rb = p2.b + p0.b.scaled(k);
    if (!rb.is_zero()) return rb;
    return std::nullopt;
}

HStructure check_H_structure(const RatFun& H, const RatFun& M, const std::vector<CoeffField>& candidates) {
    if (H.is_zero()) throw MixedFactor("H vanishes identically");
    const Poly& N = H.num();
    Poly wfull = content_in(N, Var::z);
    Poly w = wfull.exact_quotient(content_in(wfull, Var::E));
    Poly rest = N.exact_quotient(w);
    Poly pfull = content_in(rest, Var::E);
    Poly P = pfull.exact_quotient(content_in(pfull, Var::z));
    rest = rest.exact_quotient(P);
    if (rest.contains(Var::z) || rest.contains(Var::E))
        throw MixedFactor("numerator factor " + rest.to_string() + " involves both z and E");

    HStructure out;
    out.w = w;
    out.P = P;
    out.Q = RatFun(H.den(), rest);

    unsigned need = M.num().degree(Var::E) + M.den().degree(Var::E) + 1;
    if (w.degree(Var::E) < need)
        throw DegreeBoundViolated("deg_E w = " + std::to_string(w.degree(Var::E)) + " < " + std::to_string(need));

    auto factors = squarefree_decomposition(w, Var::E);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        unsigned mult = static_cast<unsigned>(i + 1);
        Poly f = factors[i];
        auto take = [&](const CoeffField& root) {
            out.roots.push_back({root, mult});
            f = f.exact_quotient(linear_factor(root));
        };
        for (const auto& cand : candidates) {
            if (f.degree(Var::E) <= 1) break;
            if (RatFun(f).substitute(Var::E, cand).is_zero()) take(cand);
        }
        if (f.degree(Var::E) > 1 && (f.support() & ~mask_of(Var::E)) == 0)
            for (const auto& r : rational_roots(f))
                if (f.degree(Var::E) > 1) take(RatFun(r));
        if (f.degree(Var::E) == 1) {
            auto cs = f.coefficients(Var::E);
            out.roots.push_back({-RatFun(cs[0], cs[1]), mult});
        } else if (f.degree(Var::E) > 1) {
            out.unresolved.emplace_back(f, mult);
        }
    }
    return out;
}

} // namespace specpot
