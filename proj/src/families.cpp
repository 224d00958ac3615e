#include "specpot/families.hpp"

#include <map>

#include "specpot/error.hpp"
#include "specpot/interp.hpp"

namespace specpot {

std::string family_name(Family f) {
    switch (f) {
    case Family::F1: return "1";
    case Family::F2: return "2";
    case Family::F3log: return "3log";
    case Family::F3poly: return "3poly";
    case Family::F4: return "4";
    case Family::Singular: return "singular";
    }
    return "?";
}

namespace {

PotentialResult assemble(PotentialResult r, const std::vector<CoeffField>& candidates) {
    if (r.M) {
        r.H = H_of(r.gauge_case, *r.M, r.nu);
        r.structure = check_H_structure(*r.H, *r.M, candidates);
    } else {
        r.H.reset();
        r.structure.reset();
    }
    r.V = V_of(r.gauge_case, r.M, r.nu);
    if (ode_residual_generic(r.gauge_case, r.M, r.V, r.nu))
        throw std::logic_error("Schroedinger residual does not vanish for the generated potential");
    return r;
}

std::vector<CoeffField> node_energies(const PotentialResult& r, const CoeffField& nu) {
    std::vector<CoeffField> out;
    for (const auto& n : r.nodes1) out.push_back(energy_case1(n, nu));
    for (const auto& n : r.nodes2) out.push_back(energy_case2(n, nu));
    if (r.family == Family::F3log || r.family == Family::F3poly) out.push_back(RatFun());
    return out;
}

template <class Node>
void reject_repeated(const std::vector<Node>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j]) throw DuplicateNode("node listed twice");
}

// True when all energies are distinct; throws when three or more coincide.
bool distinct_energies(const std::vector<CoeffField>& energies) {
    bool distinct = true;
    for (std::size_t i = 0; i < energies.size(); ++i) {
        unsigned same = 1;
        for (std::size_t j = 0; j < energies.size(); ++j)
            if (j != i && energies[j] == energies[i]) ++same;
        if (same >= 3) throw CoincidentNodes("three or more nodes share E = " + energies[i].to_string());
        if (same > 1) distinct = false;
    }
    return distinct;
}

} // namespace

void verify(const PotentialResult& r) {
    if (auto witness = ode_residual_generic(r.gauge_case, r.M, r.V, r.nu)) {
        std::string w = witness->terms().empty() ? "0" : witness->terms().begin()->second.to_string();
        throw NonzeroResidual("psi'' + (V + E) psi has the nonzero coordinate " + w);
    }
    if (r.M) {
        RatFun H = H_of(r.gauge_case, *r.M, r.nu);
        if (r.H && !(H == *r.H)) throw InconsistentRatio("stored H differs from the gauge");
        check_H_structure(H, *r.M, node_energies(r, r.nu));
    }
}

PotentialResult gen_family1_raw(const std::vector<InterpNode>& nodes, const CoeffField& nu) {
    PotentialResult r;
    r.family = Family::F1;
    r.gauge_case = GaugeCase::C1;
    r.nu = nu;
    r.M = rat_interpolate(nodes);
    std::vector<CoeffField> energies;
    for (const auto& n : nodes) energies.push_back(n.energy);
    return assemble(std::move(r), energies);
}

PotentialResult gen_family1(const std::vector<NodeSpec1>& nodes, const CoeffField& nu) {
    if (nodes.empty()) {
        PotentialResult r = singular_potential(GaugeCase::C1, nu);
        r.family = Family::F1;
        return r;
    }
    reject_repeated(nodes);
    std::vector<InterpNode> samples;
    for (const auto& n : nodes) {
        Seed s = seed_case1(n, nu);
        samples.push_back({s.energy, s.M});
    }
    PotentialResult r;
    r.family = Family::F1;
    r.gauge_case = GaugeCase::C1;
    r.nu = nu;
    r.nodes1 = nodes;
    r.M = rat_interpolate(samples);
    return assemble(std::move(r), node_energies(r, nu));
}

PotentialResult gen_family2(const std::vector<NodeSpec2>& nodes, const CoeffField& nu) {
    if (nodes.empty()) {
        PotentialResult r = singular_potential(GaugeCase::C2, nu);
        r.family = Family::F2;
        return r;
    }
    reject_repeated(nodes);
    std::vector<InterpNode> samples;
    for (const auto& n : nodes) {
        Seed s = seed_case2(n, nu);
        samples.push_back({s.energy, s.M});
    }
    PotentialResult r;
    r.family = Family::F2;
    r.gauge_case = GaugeCase::C2;
    r.nu = nu;
    r.nodes2 = nodes;
    r.M = rat_interpolate(samples);
    return assemble(std::move(r), node_energies(r, nu));
}

PotentialResult gen_family1(const std::vector<NodeSpec1>& nodes, const Rational& nu) {
    reject_repeated(nodes);
    std::vector<CoeffField> energies;
    for (const auto& n : nodes) energies.push_back(energy_case1(n, RatFun(nu)));
    if (distinct_energies(energies)) return gen_family1(nodes, RatFun(nu));
    return eval_nu(gen_family1(nodes, RatFun::variable(Var::nu)), nu);
}

PotentialResult gen_family2(const std::vector<NodeSpec2>& nodes, const Rational& nu) {
    reject_repeated(nodes);
    std::vector<CoeffField> energies;
    for (const auto& n : nodes) energies.push_back(energy_case2(n, RatFun(nu)));
    if (distinct_energies(energies)) return gen_family2(nodes, RatFun(nu));
    return eval_nu(gen_family2(nodes, RatFun::variable(Var::nu)), nu);
}

LogPolyPair apply_D(const LogPolyPair& f) {
    auto c1 = f.P1.coefficients(Var::t);
    auto c2 = f.P2.coefficients(Var::t);
    std::size_t len = std::max(c1.size(), c2.size());
    std::vector<Poly> n1(len), n2(len);
    for (std::size_t k = 1; k < c1.size(); ++k) n1[k - 1] += c1[k] * Rational(-4 * static_cast<long>(k * k));
    for (std::size_t k = 1; k < c2.size(); ++k) {
        n2[k - 1] += c2[k] * Rational(-4 * static_cast<long>(k * k));
        n1[k - 1] += c2[k] * Rational(-4 * static_cast<long>(k));
    }
    return {Poly::from_coefficients(Var::t, n1), Poly::from_coefficients(Var::t, n2)};
}

TowerElem to_tower(const LogPolyPair& f) {
    Poly z2 = Poly::variable(Var::z, 2);
    return TowerElem::monomial({0, gen_bit(Gen::r)}, RatFun(f.P1.substitute(Var::t, z2))) +
           TowerElem::monomial({1, gen_bit(Gen::r)}, RatFun(f.P2.substitute(Var::t, z2)));
}

ESeries family3_log_series(const LogPolyPair& f) {
    if (f.P1.is_zero()) throw DegreeMismatch("P1 must be nonzero");
    unsigned n = f.P1.degree(Var::t) + 1;
    std::vector<LogPolyPair> powers{f};
    for (unsigned i = 1; i < n; ++i) powers.push_back(apply_D(powers.back()));
    std::vector<TowerElem> c(n);
    for (unsigned j = 0; j < n; ++j) c[j] = to_tower(powers[n - 1 - j]);
    return ESeries(std::move(c));
}

ESeries family3_poly_series(const Poly& F) {
    if (F.is_zero()) throw DegreeMismatch("F must be nonzero");
    unsigned n = F.degree(Var::z) / 2 + 1;
    std::vector<Poly> derivs{F};
    for (unsigned i = 1; i < n; ++i) derivs.push_back(-derivs.back().derivative(Var::z).derivative(Var::z));
    std::vector<TowerElem> c(n);
    for (unsigned j = 0; j < n; ++j) c[j] = TowerElem(RatFun(derivs[n - 1 - j]));
    return ESeries(std::move(c));
}

PotentialResult gen_family3_log(const LogPolyPair& f) {
    if ((f.P1.support() | f.P2.support()) & (mask_of(Var::z) | mask_of(Var::E)))
        throw DegreeMismatch("P1 and P2 are polynomials in t");
    ESeries y = family3_log_series(f);
    std::vector<RatFun> series;
    try {
        series = series_log_derivative(y);
    } catch (const NotInvertible&) {
        throw NonRationalCoefficient("leading series coefficient involves ln z");
    }
    PotentialResult r;
    r.family = Family::F3log;
    r.gauge_case = GaugeCase::C3;
    r.nu = RatFun();
    r.log_pair = f;
    r.M = pade_from_series(series, DegreeSpec::for_count(static_cast<unsigned>(series.size()))).value;
    return assemble(std::move(r), {RatFun()});
}

PotentialResult gen_family3_poly(const Poly& F, std::optional<unsigned> n) {
    if (F.is_zero() || (F.support() & (mask_of(Var::E) | mask_of(Var::t))))
        throw DegreeMismatch("F must be a nonzero polynomial in z");
    unsigned d = F.degree(Var::z);
    if (n && d != 2 * *n - 1 && d + 2 != 2 * *n)
        throw DegreeMismatch("deg F = " + std::to_string(d) + " with n = " + std::to_string(*n));
    ESeries y = family3_poly_series(F);
    auto series = series_log_derivative(y);
    PotentialResult r;
    r.family = Family::F3poly;
    r.gauge_case = GaugeCase::C3;
    r.nu = RatFun(Rational(1, 2));
    r.F = F;
    r.M = pade_from_series(series, DegreeSpec::for_count(static_cast<unsigned>(series.size()))).value;
    return assemble(std::move(r), {RatFun()});
}

PotentialResult gen_family4() {
    PotentialResult r = singular_potential(GaugeCase::C4, RatFun(Rational(1, 3)));
    r.family = Family::F4;
    return r;
}

PotentialResult singular_potential(GaugeCase c, const CoeffField& nu) {
    PotentialResult r;
    r.family = Family::Singular;
    r.gauge_case = c;
    r.nu = c == GaugeCase::C4 ? RatFun(Rational(1, 3)) : nu;
    return assemble(std::move(r), {});
}

PotentialResult eval_nu(const PotentialResult& r, const Rational& nu0) {
    PotentialResult out = r;
    out.nu = r.nu.eval_nu(nu0);
    if (r.M) out.M = r.M->eval_nu(nu0);
    std::vector<CoeffField> energies;
    for (const auto& e : node_energies(r, RatFun(nu0)))
        if (std::find(energies.begin(), energies.end(), e) == energies.end()) energies.push_back(e);
    return assemble(std::move(out), energies);
}

} // namespace specpot
