#include "specpot/seeds.hpp"

#include "specpot/algebra/linalg.hpp"
#include "specpot/error.hpp"

namespace specpot {

namespace {

const RatFun& z_var() {
    static const RatFun z = RatFun::variable(Var::z);
    return z;
}

RatFun rising(const CoeffField& x, unsigned n) {
    RatFun r(1);
    for (unsigned j = 0; j < n; ++j) r *= x + RatFun(static_cast<long>(j));
    return r;
}

bool singular_pochhammer(const CoeffField& b, unsigned k) {
    for (unsigned j = 0; j < k; ++j)
        if ((b + RatFun(static_cast<long>(j))).is_zero()) return true;
    return false;
}

RatFun sign_rat(int s) { return RatFun(static_cast<long>(s)); }

} // namespace

RatFun HyperexpSeed::gauge() const {
    RatFun d = z_power / z_var() + carrier.derivative(Var::z) + poly.derivative(Var::z) / poly;
    return -d;
}

RatFun f1f1_regularized(unsigned k, const CoeffField& b, const RatFun& x) {
    RatFun sum;
    RatFun xp(1);
    Rational kfall = 1; // (-k)_j
    for (unsigned j = 0; j <= k; ++j) {
        RatFun term = RatFun(kfall / Rational(factorial(j))) * rising(b + RatFun(static_cast<long>(j)), k - j);
        sum += term * xp;
        xp *= x;
        kfall *= Rational(static_cast<long>(j) - static_cast<long>(k));
    }
    return sum;
}

RatFun f1f1(unsigned k, const CoeffField& b, const RatFun& x) {
    if (singular_pochhammer(b, k)) {
        RatFun r = f1f1_regularized(k, b, x);
        if (r.is_zero()) throw SingularParameter("1F1 regularization vanishes for b = " + b.to_string());
        return r;
    }
    RatFun sum;
    RatFun coef(1);
    RatFun xp(1);
    for (unsigned j = 0; j <= k; ++j) {
        sum += coef * xp;
        if (j == k) break;
        xp *= x;
        // (-k+j) / ((b+j)(j+1))
        coef *= RatFun(Rational(static_cast<long>(j) - static_cast<long>(k), static_cast<long>(j + 1))) /
                (b + RatFun(static_cast<long>(j)));
    }
    return sum;
}

RatFun f1f1_poly(unsigned k, const CoeffField& b, int scale) {
    return f1f1(k, b, sign_rat(scale) * z_var() * z_var());
}

CoeffField energy_case1(const NodeSpec1& node, const CoeffField& nu) {
    return sign_rat(node.eps1) * RatFun(static_cast<long>(4 * node.k + 2)) + sign_rat(4 * node.eps2) * nu;
}

CoeffField energy_case2(const NodeSpec2& node, const CoeffField& nu) {
    RatFun m = sign_rat(2 * node.eps) * nu + RatFun(static_cast<long>(2 * node.k + 1));
    if (m.is_zero()) throw SingularParameter("2 eps nu + 2k + 1 vanishes");
    return -(m * m).inverse();
}

RatFun degenerate_residual(int which, const RatFun& M, const CoeffField& E0, const CoeffField& nu) {
    const RatFun& z = z_var();
    RatFun yy = M * M - M.derivative(Var::z); // Y''/Y
    if (which == 1)
        return z * z * yy + z * M - (pow(z, 4) - E0 * z * z + RatFun(4) * nu * nu - RatFun(1));
    return RatFun(4) * z * z * yy + RatFun(4) * E0 * z * z + RatFun(4) * z - RatFun(4) * nu * nu + RatFun(1);
}

Seed seed_case1(const NodeSpec1& node, const CoeffField& nu) {
    RatFun b = sign_rat(2 * node.eps1 * node.eps2) * nu;
    const RatFun& z = z_var();
    HyperexpSeed y{b + RatFun(1), sign_rat(-node.eps1) * z * z / RatFun(2),
                   f1f1(node.k, b + RatFun(1), sign_rat(node.eps1) * z * z)};
    Seed s{energy_case1(node, nu), y.gauge(), y};
    if (!degenerate_residual(1, s.M, s.energy, nu).is_zero())
        throw std::logic_error("case-1 seed does not solve its equation");
    return s;
}

Seed seed_case2(const NodeSpec2& node, const CoeffField& nu) {
    RatFun m = sign_rat(2 * node.eps) * nu + RatFun(static_cast<long>(2 * node.k + 1));
    if (m.is_zero()) throw SingularParameter("2 eps nu + 2k + 1 vanishes");
    const RatFun& z = z_var();
    HyperexpSeed y{sign_rat(node.eps) * nu + RatFun(Rational(1, 2)), -z / m,
                   f1f1(node.k, sign_rat(2 * node.eps) * nu + RatFun(1), RatFun(2) * z / m)};
    Seed s{energy_case2(node, nu), y.gauge(), y};
    if (!degenerate_residual(2, s.M, s.energy, nu).is_zero())
        throw std::logic_error("case-2 seed does not solve its equation");
    return s;
}

RatFun wronskian_ratio(const RatFun& M1, const RatFun& M2) { return M1 - M2; }

std::optional<RatFun> hyperexp_integrate(const RatFun& p, const RatFun& q, const CoeffField& a) {
    const RatFun& z = z_var();
    if (p.is_zero()) return RatFun();
    Poly dn(1);
    if (a.is_constant()) {
        Rational av = a.constant_value();
        if (av > 0 && is_integer(av) && (q.den().min_degree(Var::z) == 0))
            dn = Poly::variable(Var::z, static_cast<unsigned>(av.get_num().get_ui()));
    }
    dn = dn * p.den();
    RatFun dnr(dn);
    RatFun mult = a / z + q.derivative(Var::z);
    unsigned deg = p.num().degree(Var::z) + dn.degree(Var::z) + 3;

    std::vector<RatFun> images;
    for (unsigned i = 0; i <= deg; ++i) {
        RatFun r = pow(z, i) / dnr;
        images.push_back(r.derivative(Var::z) + mult * r);
    }
    // Common denominator over z.
    RatFun common(1);
    for (const auto& f : images) common = common * RatFun(f.den()) / RatFun(gcd(common.num(), f.den()));
    common = common * RatFun(p.den()) / RatFun(gcd(common.num(), p.den()));

    auto coefficients_of = [&](const RatFun& f) {
        RatFun g = f * common;
        auto cs = g.num().coefficients(Var::z);
        std::vector<RatFun> out;
        for (auto& c : cs) out.push_back(RatFun(c, g.den()));
        return out;
    };
    std::vector<std::vector<RatFun>> cols;
    std::size_t rows = 0;
    for (const auto& f : images) {
        cols.push_back(coefficients_of(f));
        rows = std::max(rows, cols.back().size());
    }
    auto rhs = coefficients_of(p);
    rows = std::max(rows, rhs.size());
    Matrix<RatFun> mat(rows, std::vector<RatFun>(images.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < cols[c].size(); ++r) mat[r][c] = cols[c][r];
    rhs.resize(rows);
    auto sol = solve_linear(std::move(mat), rhs, images.size());
    if (!sol) return std::nullopt;
    RatFun num;
    for (unsigned i = 0; i <= deg; ++i) num += (*sol)[i] * pow(z, i);
    RatFun result = num / dnr;
    if (!(result.derivative(Var::z) + mult * result == p)) return std::nullopt;
    return result;
}

std::optional<RatFun> double_root_correction(const NodeSpec1& node, const Rational& nu) {
    const RatFun& z = z_var();
    Rational b = 2 * node.eps1 * node.eps2 * nu;
    RatFun f = f1f1(node.k, RatFun(b + 1), sign_rat(node.eps1) * z * z);
    return hyperexp_integrate(f * f, sign_rat(-node.eps1) * z * z, RatFun(2 * b + 1));
}

CoeffField gamma_sum_check(unsigned k, const CoeffField& nu, int eps1, int eps2) {
    RatFun b = sign_rat(2 * eps1 * eps2) * nu;
    RatFun f = f1f1(k, b + RatFun(1), sign_rat(eps1) * z_var());
    RatFun sq = f * f;
    auto cs = sq.num().coefficients(Var::z);
    RatFun lhs;
    RatFun sign(1);
    for (std::size_t n = 0; n < cs.size(); ++n) {
        RatFun v(cs[n], sq.den());
        lhs += v * sign * rising(b, static_cast<unsigned>(n + 1));
        sign *= sign_rat(eps1);
    }
    RatFun rhs = sign_rat(2 * eps1 * eps2) * nu * RatFun(Rational(factorial(k))) / rising(b + RatFun(1), k);
    return lhs - rhs;
}

Rational gamma_sum_check(unsigned k, const Rational& nu) {
    if (is_integer(2 * nu)) throw SingularParameter("2 nu = " + to_string(Rational(2 * nu)) + " is an integer");
    return gamma_sum_check(k, RatFun(nu)).constant_value();
}

namespace {

// Coefficients c_0..c_{n-1} of the power series of a/b at 0 (b(0) != 0).
std::vector<Rational> series_quotient(const Poly& a, const Poly& b, std::size_t n) {
    auto ac = a.coefficients(Var::z), bc = b.coefficients(Var::z);
    auto at = [](const std::vector<Poly>& v, std::size_t i) {
        return i < v.size() ? v[i].constant_term() : Rational(0);
    };
    std::vector<Rational> c(n);
    Rational b0 = at(bc, 0);
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc = at(ac, j);
        for (std::size_t i = 1; i <= j && i < bc.size(); ++i) acc -= at(bc, i) * c[j - i];
        c[j] = acc / b0;
    }
    return c;
}

} // namespace

Rational residue_pairing(unsigned p, unsigned k) {
    const RatFun& z = z_var();
    long shift = static_cast<long>(p) - static_cast<long>(k);
    RatFun f = f1f1(k, RatFun(shift + 1), z * z);
    auto r = hyperexp_integrate(f * f, -z * z, RatFun(2 * shift + 1));
    if (!r) throw std::logic_error("antiderivative of Y^2/z is not elementary");
    // int Y^2/z = R z^(2 shift + 1) e^(-z^2), so z/Y^2 (int Y^2/z)^2 = T e^(-z^2).
    RatFun t = (*r) * (*r) * pow(z, 2 * shift + 1) / (f * f);
    long u = t.num().min_degree(Var::z), v = t.den().min_degree(Var::z);
    Poly a = t.num().exact_quotient(Poly::variable(Var::z, static_cast<unsigned>(u)));
    Poly b = t.den().exact_quotient(Poly::variable(Var::z, static_cast<unsigned>(v)));
    long low = u - v; // T = z^low * a/b
    if (low > -1) return 0;
    auto c = series_quotient(a, b, static_cast<std::size_t>(-1 - low + 1));
    Rational res = 0;
    Rational weight = 1; // (-1)^j / j!
    for (long j = 0; -1 - 2 * j >= low; ++j) {
        res += weight * c[static_cast<std::size_t>(-1 - 2 * j - low)];
        weight *= Rational(-1, j + 1);
    }
    return res;
}

Rational residue_closed_form(unsigned p, unsigned k) {
    if (p >= k)
        return Rational(factorial(k) * factorial(p - k) * factorial(p - k)) / Rational(4 * factorial(p));
    Integer g = factorial(k - p - 1);
    return Rational(factorial(k)) / Rational(g * g * factorial(p));
}

} // namespace specpot
