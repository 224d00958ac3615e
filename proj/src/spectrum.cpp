#include "specpot/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "specpot/algebra/linalg.hpp"
#include "specpot/algebra/upoly.hpp"
#include "specpot/error.hpp"

namespace specpot {

namespace {

const RatFun kZ = RatFun::variable(Var::z);

QPoly upoly(const Poly& p) { return QPoly::from_poly(p, Var::z); }

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

Rational numeric_nu(const PotentialResult& r) {
    if (!r.nu.is_constant()) throw SymbolicNu("nu must be a rational number");
    return r.nu.constant_value();
}

void require_numeric(const RatFun& V) {
    if (V.support() & ~mask_of(Var::z)) throw SymbolicNu("the potential still has free parameters");
}

/// Splits off z^k from a polynomial in z.
std::pair<Poly, unsigned> strip_z(const Poly& p) {
    unsigned k = p.min_degree(Var::z);
    if (k == 0) return {p, 0};
    return {p.exact_quotient(Poly::variable(Var::z, k)), k};
}

/// Coefficients of V at infinity: v[0] = z^2, v[1] = z, v[2] = 1, v[3] = 1/z.
std::array<Rational, 4> expansion_at_infinity(const RatFun& V) {
    QPoly n = upoly(V.num()), d = upoly(V.den());
    auto [q, r] = n.divmod(d);
    if (q.degree() > 2) throw NoSolution("potential grows faster than z^2");
    std::array<Rational, 4> v{q.coefficient(2), q.coefficient(1), q.coefficient(0), Rational(0)};
    if (!r.is_zero() && r.degree() == d.degree() - 1) v[3] = r.lead() / d.lead();
    return v;
}

/// Exponents at z = 0 compatible with V ~ alpha / z^2.
std::vector<Rational> indicial_exponents(const RatFun& V) {
    unsigned k = V.den().min_degree(Var::z);
    if (k > 2) throw NoSolution("irregular singular point at z = 0");
    Rational alpha = 0;
    if (k == 2) {
        Poly rest = V.den().exact_quotient(Poly::variable(Var::z, 2));
        alpha = V.num().substitute(Var::z, Rational(0)).constant_term() /
                rest.substitute(Var::z, Rational(0)).constant_term();
    }
    auto disc = rational_sqrt(1 - 4 * alpha);
    if (!disc) throw NoSolution("irrational exponent at z = 0");
    Rational lo = (1 - *disc) / 2, hi = (1 + *disc) / 2;
    if (lo == hi || is_integer(hi - lo)) return {lo};
    return {lo, hi};
}

/// Denominator of R forced by the double poles of V away from 0.
Poly pole_denominator(const RatFun& V) {
    Poly den = strip_z(V.den()).first;
    Poly out(1);
    auto factors = squarefree_decomposition(den, Var::z);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Poly& f = factors[i];
        if (f.degree(Var::z) == 0) continue;
        unsigned mult = static_cast<unsigned>(i + 1);
        if (mult == 1) continue;
        if (mult > 2) throw NoSolution("pole of order above two");
        QPoly fu = upoly(f);
        QPoly g = upoly(V.den().exact_quotient(f * f));
        QPoly df = fu.derivative();
        QPoly c = (upoly(V.num()) * inverse_mod(df * df * g % fu, fu)) % fu;
        unsigned m = 2;
        if (c.degree() <= 0) {
            // m (m + 1) + c = 0
            Rational c0 = c.coefficient(0);
            auto disc = rational_sqrt(1 - 4 * c0);
            if (!disc) throw NoSolution("irrational exponent at a pole of V");
            Rational root = (-1 + *disc) / 2;
            if (!is_integer(root)) throw NoSolution("non-integral exponent at a pole of V");
            if (root <= 0) continue;
            m = static_cast<unsigned>(root.get_num().get_ui());
        }
        out *= pow(f, m);
    }
    return out.primitive();
}

/// u'' + 2 A u' + (A^2 + A' + V + E0) u
RatFun ansatz_operator(const RatFun& u, const RatFun& A, const RatFun& rest) {
    RatFun du = u.derivative(Var::z);
    return du.derivative(Var::z) + RatFun(2) * A * du + rest * u;
}

std::optional<Poly> solve_numerator(const RatFun& V, const Rational& E0, const RatFun& A,
                                    const Poly& Dn, unsigned degree) {
    RatFun rest = A * A + A.derivative(Var::z) + V + RatFun(E0);
    std::vector<Poly> columns;
    Poly common(1);
    std::vector<RatFun> images;
    for (unsigned i = 0; i <= degree; ++i) {
        images.push_back(ansatz_operator(RatFun(Poly::variable(Var::z, i), Dn), A, rest));
        const Poly& d = images.back().den();
        common = common * d.exact_quotient(gcd(common, d));
    }
    unsigned rows = 0;
    for (const auto& im : images) {
        columns.push_back(im.num() * common.exact_quotient(im.den()));
        rows = std::max(rows, columns.back().degree(Var::z) + 1);
    }
    Matrix<Rational> m(rows, std::vector<Rational>(degree + 1, Rational(0)));
    for (unsigned j = 0; j <= degree; ++j) {
        auto coeffs = columns[j].coefficients(Var::z);
        for (std::size_t i = 0; i < coeffs.size(); ++i) m[i][j] = coeffs[i].constant_term();
    }
    auto basis = nullspace(m, degree + 1);
    if (basis.empty()) return std::nullopt;
    Poly N;
    for (unsigned j = 0; j <= degree; ++j) N += Poly::variable(Var::z, j) * basis[0][j];
    if (N.degree(Var::z) != degree) return std::nullopt;
    return N.primitive();
}

ClosedForm normalized(RatFun q, Rational g, RatFun R) {
    Rational shift = g.get_num() / g.get_den();   // toward zero
    if (g - shift < 0) shift -= 1;
    if (shift != 0) {
        long s = shift.get_num().get_si();
        R = R * pow(kZ, s);
        g -= shift;
    }
    return ClosedForm{std::move(q), std::move(g), std::move(R)};
}

int leading_sign_toward(const RatFun& q, int direction) {
    QPoly p = upoly(q.num());
    if (p.is_zero()) return 0;
    int s = sgn(p.lead()) * sgn(upoly(q.den()).lead());
    int d = p.degree() - static_cast<int>(q.den().degree(Var::z));
    if (direction < 0 && d % 2 != 0) s = -s;
    return s;
}

std::vector<RatFun> exponent_candidates(const PotentialResult& r, const Rational& E0) {
    if (r.family == Family::F1) {
        RatFun h = RatFun(Rational(1, 2)) * kZ * kZ;
        return {-h, h};
    }
    auto root = rational_sqrt(-E0);
    if (!root) throw NoSolution("-E0 is not the square of a rational");
    if (*root == 0) return {RatFun()};
    RatFun k = RatFun(*root) * kZ;
    return {-k, k};
}

} // namespace

std::string interval_name(Interval i) {
    switch (i) {
    case Interval::R: return "R";
    case Interval::RPlus: return "R+";
    case Interval::RMinus: return "R-";
    }
    return "R";
}

std::optional<Interval> interval_from_name(const std::string& s) {
    if (s == "R") return Interval::R;
    if (s == "R+") return Interval::RPlus;
    if (s == "R-") return Interval::RMinus;
    return std::nullopt;
}

std::vector<Rational> CandidateSet::energies() const {
    std::vector<Rational> out;
    for (const auto& c : candidates) out.push_back(c.energy);
    return out;
}

std::vector<Rational> CandidateSet::degenerate() const {
    std::vector<Rational> out;
    for (const auto& c : candidates)
        if (c.degenerate) out.push_back(c.energy);
    return out;
}

TowerElem ClosedForm::as_tower() const {
    TowerElem out(R);
    if (g != 0) {
        if (g != Rational(1, 2)) throw NonRationalCoefficient("z^g with 2g not an integer");
        out = out * TowerElem::generator(Gen::r);
    }
    if (!q.is_zero()) out = out * TowerElem::exp(q);
    return out;
}

RatFun ClosedForm::log_derivative() const {
    return q.derivative(Var::z) + RatFun(g) / kZ + R.derivative(Var::z) / R;
}

std::string ClosedForm::to_string() const {
    auto wrap = [](const Poly& p) {
        return p.size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    };
    std::vector<std::string> factors;
    if (!q.is_zero()) factors.push_back("exp(" + q.to_string() + ")");
    if (g == Rational(1, 2))
        factors.push_back("sqrt(z)");
    else if (g != 0)
        factors.push_back("z^(" + specpot::to_string(g) + ")");
    std::string num = wrap(R.num());
    if (factors.empty() || num != "1") factors.push_back(num);
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    if (!R.is_polynomial()) {
        std::string r = R.to_string();
        out += r.substr(r.rfind('/'));
    }
    return out;
}

std::optional<double> ClosedForm::evaluate(double z) const {
    auto eval = [z](const Poly& p) {
        double acc = 0;
        auto c = p.coefficients(Var::z);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + to_double(c[i].constant_term());
        return acc;
    };
    double dq = eval(q.den()), dr = eval(R.den());
    if (dq == 0 || dr == 0) return std::nullopt;
    double zg = 1;
    if (g != 0) {
        if (z < 0 || (z == 0 && g < 0)) return std::nullopt;
        zg = std::pow(z, to_double(g));
    }
    return std::exp(eval(q.num()) / dq) * zg * eval(R.num()) / dr;
}

CandidateSet enumerate_candidates(const PotentialResult& result, unsigned bound) {
    if (result.family != Family::F1 && result.family != Family::F2)
        throw NoSolution("candidate energies exist for families 1 and 2 only");
    Rational nu = numeric_nu(result);
    std::map<Rational, Candidate> found;
    auto add = [&](const Rational& e, std::string tag) {
        auto& c = found[e];
        c.energy = e;
        c.provenance.push_back(std::move(tag));
    };
    for (unsigned k = 0; k <= bound; ++k) {
        if (result.family == Family::F1) {
            for (int e1 : {1, -1})
                for (int e2 : {1, -1})
                    add(e1 * Rational(4 * k + 2) + 4 * e2 * nu,
                        "(" + std::to_string(k) + "," + sign_char(e1) + "," + sign_char(e2) + ")");
        } else {
            for (int e : {1, -1}) {
                Rational m = 2 * e * nu + (2 * k + 1);
                if (m == 0) continue;
                add(-1 / (m * m), "(" + std::to_string(k) + "," + sign_char(e) + ")");
            }
        }
    }
    CandidateSet out;
    for (auto& [e, c] : found) {
        if (result.structure) {
            Poly w = result.structure->w.substitute(Var::nu, nu).substitute(Var::E, e);
            c.degenerate = w.is_zero();
        }
        out.candidates.push_back(std::move(c));
    }
    return out;
}

RatFun eigen_residual(const RatFun& V, const Rational& E0, const ClosedForm& psi) {
    RatFun lambda = psi.log_derivative();
    return lambda.derivative(Var::z) + lambda * lambda + V + RatFun(E0);
}

EigenPair liouvillian_eigenfunction(const PotentialResult& result, const Rational& E0,
                                    unsigned degree_cap) {
    if (result.family != Family::F1 && result.family != Family::F2)
        throw NoSolution("closed-form eigenfunctions are sought for families 1 and 2 only");
    numeric_nu(result);
    const RatFun& V = result.V;
    require_numeric(V);

    auto vinf = expansion_at_infinity(V);
    Poly Dn = pole_denominator(V);
    unsigned deg_dn = Dn.degree(Var::z);
    std::string last = "no polynomial numerator";
    bool over_cap = false;

    for (const RatFun& q : exponent_candidates(result, E0)) {
        // psi ~ e^q z^n at infinity
        Rational n;
        if (result.family == Family::F1) {
            if (vinf[0] != -1 || vinf[1] != 0) throw NoSolution("potential is not -z^2 + O(1) at infinity");
            int eps = sgn(q.num().leading_coefficient());
            n = -(vinf[2] + E0 + eps) / (2 * eps);
        } else {
            if (vinf[0] != 0 || vinf[1] != 0 || vinf[2] != 0)
                throw NoSolution("potential does not vanish at infinity");
            if (q.is_zero()) continue;
            Rational kappa = q.num().leading_coefficient();
            n = -vinf[3] / (2 * kappa);
        }
        for (const Rational& g : indicial_exponents(V)) {
            Rational deg = n - g + deg_dn;
            if (!is_integer(deg) || deg < 0) continue;
            if (deg > degree_cap) {
                over_cap = true;
                continue;
            }
            unsigned d = static_cast<unsigned>(deg.get_num().get_ui());
            RatFun A = q.derivative(Var::z) + RatFun(g) / kZ;
            auto N = solve_numerator(V, E0, A, Dn, d);
            if (!N) continue;
            ClosedForm psi = normalized(q, g, RatFun(*N, Dn));
            if (!eigen_residual(V, E0, psi).is_zero())
                throw std::logic_error("eigenfunction fails the exact ODE check");
            EigenPair pair{E0, psi, {}};
            bool bound_state = false;
            for (Interval iv : {Interval::R, Interval::RPlus, Interval::RMinus})
                bound_state |= pair.l2[iv] = square_integrable(psi, iv);
            if (bound_state) return pair;
            last = "closed-form solution " + psi.to_string() + " is square integrable on no interval";
        }
    }
    if (over_cap) throw DegreeCapExceeded("numerator degree above " + std::to_string(degree_cap));
    throw NoSolution(last + " at E0 = " + specpot::to_string(E0));
}

bool square_integrable(const ClosedForm& psi, Interval interval) {
    bool plus = interval != Interval::RMinus;
    bool minus = interval != Interval::RPlus;

    // infinities
    for (int dir : {1, -1}) {
        if ((dir > 0 && !plus) || (dir < 0 && !minus)) continue;
        int s = leading_sign_toward(psi.q, dir);
        if (s > 0) return false;
        if (s == 0) {
            Rational total = psi.g + static_cast<long>(psi.R.num().degree(Var::z)) -
                             static_cast<long>(psi.R.den().degree(Var::z));
            if (2 * total >= -1) return false;
        }
    }
    // q itself may have real poles
    auto [qden, qz] = strip_z(psi.q.den());
    if (qz > 0 || count_real_roots(upoly(qden), minus ? std::nullopt : std::optional<Rational>(0),
                                    plus ? std::nullopt : std::optional<Rational>(0)) > 0) {
        if (!psi.q.den().is_constant()) return false;
    }
    // poles of R away from 0
    auto [rden, rz] = strip_z(psi.R.den());
    std::optional<Rational> lo, hi;
    if (!minus) lo = Rational(0);
    if (!plus) hi = Rational(0);
    if (count_real_roots(upoly(rden), lo, hi) > 0) return false;
    // z = 0
    Rational ord = psi.g + static_cast<long>(psi.R.num().min_degree(Var::z)) - static_cast<long>(rz);
    return 2 * ord > -1;
}

SpectrumReport compute_spectrum(const PotentialResult& result, unsigned kmax) {
    SpectrumReport report;
    if (result.family != Family::F1 && result.family != Family::F2) {
        report.discrete = false;
        report.note = "isomonodromic in E; any natural boundary condition yields the empty set or all of C*";
        return report;
    }
    report.candidates = enumerate_candidates(result, kmax);
    unsigned cap = default_degree_cap(kmax);
    for (const auto& c : report.candidates.candidates) {
        try {
            report.eigenpairs.push_back(liouvillian_eigenfunction(result, c.energy, cap));
        } catch (const NoSolution& e) {
            report.rejected.emplace_back(c.energy, e.what());
        } catch (const DegreeCapExceeded& e) {
            report.rejected.emplace_back(c.energy, e.what());
        }
    }
    return report;
}

} // namespace specpot
