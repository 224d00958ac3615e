#include "specpot/interp.hpp"

#include "specpot/algebra/linalg.hpp"
#include "specpot/error.hpp"

namespace specpot {

namespace {

RatFun polynomial_in_E(const std::vector<RatFun>& coeffs, std::size_t offset, std::size_t count) {
    RatFun out;
    RatFun e = RatFun::variable(Var::E);
    for (std::size_t i = count; i-- > 0;) out = out * e + coeffs[offset + i];
    return out;
}

bool within(const RatFun& f, DegreeSpec spec) {
    return f.num().degree(Var::E) <= spec.num_deg && f.den().degree(Var::E) <= spec.den_deg;
}

bool reproduces(const RatFun& m, const std::vector<InterpNode>& nodes) {
    for (const auto& node : nodes) {
        try {
            if (!(m.substitute(Var::E, node.energy) == node.value)) return false;
        } catch (const PoleAtPoint&) {
            return false;
        }
    }
    return true;
}

} // namespace

RatFun rat_interpolate(const std::vector<InterpNode>& nodes, DegreeSpec spec) {
    if (nodes.empty()) throw UnsolvableSystem("no interpolation nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i].energy == nodes[j].energy)
                throw DuplicateNode("E = " + nodes[i].energy.to_string());

    std::size_t np = spec.num_deg + 1, nq = spec.den_deg + 1;
    Matrix<RatFun> a;
    for (const auto& node : nodes) {
        std::vector<RatFun> row;
        RatFun power(1);
        for (std::size_t i = 0; i < np; ++i, power = power * node.energy) row.push_back(power);
        power = RatFun(1);
        for (std::size_t j = 0; j < nq; ++j, power = power * node.energy) row.push_back(-(node.value * power));
        a.push_back(std::move(row));
    }
    auto basis = nullspace(std::move(a), np + nq);
    for (const auto& v : basis) {
        RatFun den = polynomial_in_E(v, np, nq);
        if (den.is_zero()) continue;
        RatFun m = polynomial_in_E(v, 0, np) / den;
        if (reproduces(m, nodes)) return m;
    }
    throw UnsolvableSystem("no rational interpolant with degrees (" + std::to_string(spec.num_deg) +
                           "," + std::to_string(spec.den_deg) + ")");
}

RatFun rat_interpolate(const std::vector<InterpNode>& nodes) {
    DegreeSpec spec = DegreeSpec::for_count(static_cast<unsigned>(nodes.size()));
    bool reciprocal_ok = !nodes.empty();
    for (const auto& node : nodes) reciprocal_ok = reciprocal_ok && !node.value.is_zero();
    if (reciprocal_ok) {
        std::vector<InterpNode> inv;
        for (const auto& node : nodes) inv.push_back({node.energy, node.value.inverse()});
        try {
            RatFun r = rat_interpolate(inv, {spec.den_deg, spec.num_deg});
            if (!r.is_zero()) {
                RatFun m = r.inverse();
                if (within(m, spec) && reproduces(m, nodes)) return m;
            }
        } catch (const UnsolvableSystem&) {
        }
    }
    return rat_interpolate(nodes, spec);
}

std::vector<RatFun> expand_in_E(const RatFun& f, std::size_t n) {
    auto nc = f.num().coefficients(Var::E);
    auto dc = f.den().coefficients(Var::E);
    if (dc[0].is_zero()) throw PoleAtPoint("E = 0");
    RatFun d0(dc[0]);
    std::vector<RatFun> s(n);
    for (std::size_t j = 0; j < n; ++j) {
        RatFun acc = j < nc.size() ? RatFun(nc[j]) : RatFun();
        for (std::size_t i = 1; i <= j && i < dc.size(); ++i)
            if (!dc[i].is_zero()) acc -= RatFun(dc[i]) * s[j - i];
        s[j] = acc / d0;
    }
    return s;
}

PadeResult pade_from_series(const std::vector<RatFun>& coeffs, DegreeSpec spec) {
    std::size_t n = coeffs.size();
    if (n < spec.num_deg + spec.den_deg + 1)
        throw UnsolvableSystem("series order " + std::to_string(n) + " too short for Pade degrees");
    auto c = [&](long j) { return j < 0 ? RatFun() : coeffs[static_cast<std::size_t>(j)]; };
    for (long k = spec.den_deg; k >= 0; --k) {
        long m = spec.num_deg;
        Matrix<RatFun> a;
        for (long j = m + 1; j <= m + k; ++j) {
            std::vector<RatFun> row;
            for (long i = 0; i <= k; ++i) row.push_back(c(j - i));
            a.push_back(std::move(row));
        }
        std::vector<std::vector<RatFun>> basis;
        if (a.empty()) basis.push_back({RatFun(1)});
        else basis = nullspace(std::move(a), static_cast<std::size_t>(k + 1));
        for (const auto& q : basis) {
            std::vector<RatFun> p(m + 1);
            for (long j = 0; j <= m; ++j)
                for (long i = 0; i <= std::min(j, k); ++i) p[j] += q[i] * c(j - i);
            RatFun den = polynomial_in_E(q, 0, q.size());
            if (den.is_zero()) continue;
            RatFun value = polynomial_in_E(p, 0, p.size()) / den;
            try {
                if (expand_in_E(value, n) == coeffs)
                    return {value, {static_cast<unsigned>(m), static_cast<unsigned>(k)}};
            } catch (const PoleAtPoint&) {
            }
        }
    }
    throw UnsolvableSystem("no Pade approximant of the requested degrees");
}

} // namespace specpot
