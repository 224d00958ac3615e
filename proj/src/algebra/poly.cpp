#include "specpot/algebra/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "specpot/error.hpp"

namespace specpot {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"z", "E", "nu", "a",
                                                                "b", "c", "d",  "t"};

} // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (int i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::power(Var v, unsigned e) {
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    return Monomial(static_cast<std::uint64_t>(e) << shift(v));
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    std::uint64_t mask = std::uint64_t{0xff} << shift(v);
    return Monomial((bits_ & ~mask) | (static_cast<std::uint64_t>(e) << shift(v)));
}

unsigned Monomial::total_degree() const {
    unsigned s = 0;
    for (Var v : kAllVars) s += exponent(v);
    return s;
}

VarMask Monomial::support() const {
    VarMask m = 0;
    for (Var v : kAllVars)
        if (exponent(v) != 0) m |= mask_of(v);
    return m;
}

bool Monomial::divides(Monomial other) const {
    for (Var v : kAllVars)
        if (exponent(v) > other.exponent(v)) return false;
    return true;
}

Monomial Monomial::operator*(Monomial other) const {
    constexpr std::uint64_t kHigh = 0x8080808080808080ull;
    if (((bits_ | other.bits_) & kHigh) != 0) {
        for (Var v : kAllVars)
            if (exponent(v) + other.exponent(v) > 255)
                throw std::overflow_error("exponent exceeds 255");
    }
    return Monomial(bits_ + other.bits_);
}

Monomial Monomial::operator/(Monomial other) const { return Monomial(bits_ - other.bits_); }

Monomial Monomial::gcd(Monomial x, Monomial y) {
    Monomial r;
    for (Var v : kAllVars) r = r.with_exponent(v, std::min(x.exponent(v), y.exponent(v)));
    return r;
}

std::string monomial_to_string(Monomial m) {
    std::string out;
    for (Var v : kAllVars) {
        unsigned e = m.exponent(v);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += var_name(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

// ---------------------------------------------------------------- Poly basics

Poly::Poly(const Rational& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(Var v, unsigned e) { return monomial(Monomial::power(v, e), 1); }

Poly Poly::monomial(Monomial m, const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.mono > y.mono; });
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coef += t.coef;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
    return p;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
    std::vector<Term> all;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Monomial s = Monomial::power(v, static_cast<unsigned>(i));
        for (const auto& t : coeffs[i].terms_) all.push_back({t.mono * s, t.coef});
    }
    return from_terms(std::move(all));
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
    return 0;
}

unsigned Poly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

unsigned Poly::min_degree(Var v) const {
    if (terms_.empty()) return 0;
    unsigned d = 255;
    for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

VarMask Poly::support() const {
    VarMask m = 0;
    for (const auto& t : terms_) m |= t.mono.support();
    return m;
}

Monomial Poly::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial m = terms_.front().mono;
    for (const auto& t : terms_) m = Monomial::gcd(m, t.mono);
    return m;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

namespace {

// Merge x + sign*y for sorted term lists.
std::vector<Term> merge(const std::vector<Term>& x, const std::vector<Term>& y, bool subtract) {
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].mono > y[j].mono)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].mono > x[i].mono) {
            out.push_back({y[j].mono, subtract ? Rational(-y[j].coef) : y[j].coef});
            ++j;
        } else {
            Rational c = subtract ? Rational(x[i].coef - y[j].coef) : Rational(x[i].coef + y[j].coef);
            if (c != 0) out.push_back({x[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coef *= c;
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return {};
    const Poly& small = x.size() <= y.size() ? x : y;
    const Poly& big = x.size() <= y.size() ? y : x;
    if (small.size() == 1) {
        Poly r = big.shifted(small.terms_[0].mono);
        r *= small.terms_[0].coef;
        return r;
    }
    std::vector<Term> all;
    all.reserve(x.size() * y.size());
    for (const auto& s : small.terms_)
        for (const auto& b : big.terms_) all.push_back({s.mono * b.mono, s.coef * b.coef});
    return Poly::from_terms(std::move(all));
}

bool operator==(const Poly& x, const Poly& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (std::size_t i = 0; i < x.terms_.size(); ++i)
        if (x.terms_[i].mono != y.terms_[i].mono || x.terms_[i].coef != y.terms_[i].coef)
            return false;
    return true;
}

Poly Poly::shifted(Monomial m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
}

Poly Poly::derivative(Var v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e = t.mono.exponent(v);
        if (e == 0) continue;
        out.push_back({t.mono.with_exponent(v, e - 1), t.coef * e});
    }
    // Lowering one exponent keeps lexicographic order among survivors.
    Poly p;
    p.terms_ = std::move(out);
    return p;
}

Poly Poly::substitute(Var v, const Rational& x) const {
    if (!contains(v)) return *this;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        unsigned e = t.mono.exponent(v);
        out.push_back({t.mono.with_exponent(v, 0), t.coef * pow(x, static_cast<long>(e))});
    }
    return from_terms(std::move(out));
}

Poly Poly::substitute(Var v, const Poly& p) const {
    if (!contains(v)) return *this;
    auto cs = coefficients(v);
    Poly r;
    for (std::size_t i = cs.size(); i-- > 0;) {
        r = r * p;
        r += cs[i];
    }
    return r;
}

std::vector<Poly> Poly::coefficients(Var v) const {
    std::vector<Poly> out(degree(v) + 1);
    for (const auto& t : terms_) {
        unsigned e = t.mono.exponent(v);
        out[e].terms_.push_back({t.mono.with_exponent(v, 0), t.coef});
    }
    return out;
}

Rational Poly::coefficient(Monomial m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coef;
    return 0;
}

Rational Poly::content() const {
    if (terms_.empty()) return 1;
    Integer g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    return make_rational(g, l);
}

Poly Poly::primitive() const {
    if (terms_.empty()) return {};
    Rational c = content();
    if (sgn(leading_coefficient()) < 0) c = -c;
    Poly r = *this;
    Rational inv = 1 / c;
    r *= inv;
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw ZeroDenominator("polynomial division by zero");
    if (is_zero()) return Poly{};
    if (d.size() == 1) {
        const Term& dt = d.terms_[0];
        Poly q;
        q.terms_.reserve(terms_.size());
        Rational inv = 1 / dt.coef;
        for (const auto& t : terms_) {
            if (!dt.mono.divides(t.mono)) return std::nullopt;
            q.terms_.push_back({t.mono / dt.mono, t.coef * inv});
        }
        return q;
    }
    for (Var v : kAllVars)
        if (d.degree(v) > degree(v)) return std::nullopt;
    const Term& lt = d.terms_.front();
    Rational inv = 1 / lt.coef;
    std::vector<Term> q;
    Poly r = *this;
    while (!r.is_zero()) {
        const Term& rt = r.terms_.front();
        if (!lt.mono.divides(rt.mono)) return std::nullopt;
        Term qt{rt.mono / lt.mono, rt.coef * inv};
        Poly sub = d.shifted(qt.mono);
        sub *= qt.coef;
        r -= sub;
        q.push_back(std::move(qt));
    }
    Poly out;
    out.terms_ = std::move(q);
    return out;
}

Poly Poly::exact_quotient(const Poly& d) const {
    auto q = divide_exact(d);
    if (!q) throw std::logic_error("inexact polynomial division");
    return std::move(*q);
}

Rational Poly::evaluate(const std::array<Rational, kVarCount>& point) const {
    Rational sum = 0;
    for (const auto& t : terms_) {
        Rational term = t.coef;
        for (Var v : kAllVars) {
            unsigned e = t.mono.exponent(v);
            if (e) term *= pow(point[static_cast<int>(v)], static_cast<long>(e));
        }
        sum += term;
    }
    return sum;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coef;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (neg)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        if (t.mono.is_one()) {
            os << specpot::to_string(c);
        } else {
            if (c != 1) os << specpot::to_string(c) << '*';
            os << monomial_to_string(t.mono);
        }
    }
    return os.str();
}

Poly pow(const Poly& p, unsigned e) {
    Poly result(1);
    Poly base = p;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------- gcd

namespace {

using CoeffVec = std::vector<Poly>; // coefficients in the main variable

void trim(CoeffVec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

int deg(const CoeffVec& v) { return static_cast<int>(v.size()) - 1; }

CoeffVec pseudo_remainder(CoeffVec a, const CoeffVec& b) {
    const Poly& lcb = b.back();
    int db = deg(b);
    int e = deg(a) - db + 1;
    trim(a);
    while (!a.empty() && deg(a) >= db) {
        Poly t = a.back();
        int shift = deg(a) - db;
        for (auto& c : a) c = c * lcb;
        for (int j = 0; j <= db; ++j) a[j + shift] -= t * b[j];
        a.pop_back();
        trim(a);
        --e;
    }
    if (e > 0 && !a.empty()) {
        Poly f = pow(lcb, static_cast<unsigned>(e));
        for (auto& c : a) c = c * f;
    }
    return a;
}

constexpr std::uint64_t kPrime = 2305843009213693951ull; // 2^61 - 1

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % kPrime);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b);
        b = mulmod(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t x) { return powmod(x, kPrime - 2); }

std::optional<std::uint64_t> rational_mod(const Rational& q) {
    std::uint64_t d = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
    if (d == 0) return std::nullopt;
    std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), kPrime);
    return mulmod(n, invmod(d));
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of p in F_p[v] after assigning point[w] to every other variable.
std::optional<ModPoly> image(const Poly& p, Var v, const std::array<std::uint64_t, kVarCount>& point) {
    ModPoly out(p.degree(v) + 1, 0);
    for (const auto& t : p.terms()) {
        auto c = rational_mod(t.coef);
        if (!c) return std::nullopt;
        std::uint64_t val = *c;
        for (Var w : kAllVars) {
            if (w == v) continue;
            unsigned e = t.mono.exponent(w);
            if (e) val = mulmod(val, powmod(point[static_cast<int>(w)], e));
        }
        auto& slot = out[t.mono.exponent(v)];
        slot = (slot + val) % kPrime;
    }
    return out;
}

std::size_t mod_gcd_degree(ModPoly a, ModPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        std::uint64_t inv = invmod(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            std::uint64_t f = mulmod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t s = mulmod(f, b[j]);
                a[j + shift] = (a[j + shift] + kPrime - s) % kPrime;
            }
            trim(a);
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : a.size() - 1;
}

// Upper bound on deg_v gcd(x, y) from one modular image, or nullopt when the
// evaluation point was unlucky.
std::optional<unsigned> gcd_degree_bound(const Poly& x, const Poly& y, Var v, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::array<std::uint64_t, kVarCount> point{};
        for (auto& p : point) p = 2 + rng() % (kPrime - 3);
        auto ix = image(x, v, point);
        auto iy = image(y, v, point);
        if (!ix || !iy) continue;
        if (ix->size() != x.degree(v) + 1 || ix->back() == 0) continue;
        if (iy->size() != y.degree(v) + 1 || iy->back() == 0) continue;
        return static_cast<unsigned>(mod_gcd_degree(*ix, *iy));
    }
    return std::nullopt;
}

// gcd of the coefficients of p with respect to v, folded into `acc`.
Poly fold_coefficients(Poly acc, const Poly& p, Var v) {
    if (p.is_zero()) return acc.is_zero() ? Poly(1) : acc;
    auto cs = p.coefficients(v);
    std::sort(cs.begin(), cs.end(), [](const Poly& l, const Poly& r) { return l.size() < r.size(); });
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? c.primitive() : gcd(acc, c);
        if (acc.is_constant()) return Poly(1);
    }
    return acc;
}


// Last nonzero remainder of the subresultant sequence; deg a >= deg b.
CoeffVec subresultant_last(CoeffVec a, CoeffVec b) {
    Poly g(1), h(1);
    while (true) {
        int delta = deg(a) - deg(b);
        CoeffVec r = pseudo_remainder(a, b);
        if (r.empty()) return b;
        if (deg(r) == 0) return {Poly(1)};
        Poly divisor = g * pow(h, static_cast<unsigned>(delta));
        for (auto& c : r) c = c.exact_quotient(divisor);
        a = std::move(b);
        b = std::move(r);
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = pow(g, static_cast<unsigned>(delta))
                    .exact_quotient(pow(h, static_cast<unsigned>(delta - 1)));
        }
    }
}

Integer max_norm(const Poly& p) {
    Integer m = 0;
    for (const auto& t : p.terms()) {
        Integer a = abs(t.coef.get_num());
        if (a > m) m = a;
    }
    return m;
}

Integer smod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

// Rebuild a polynomial in x from its image at x = xi via symmetric xi-adic digits.
Poly genpoly(Poly g, const Integer& xi, Var x) {
    std::vector<Term> out;
    Rational inv = Rational(1) / Rational(xi);
    for (unsigned i = 0; !g.is_zero(); ++i) {
        if (i > 255) return Poly{};
        std::vector<Term> digit;
        for (const auto& t : g.terms()) {
            Integer e = smod(t.coef.get_num(), xi);
            if (e != 0) digit.push_back({t.mono, Rational(e)});
        }
        Poly d = Poly::from_terms(digit);
        for (const auto& t : d.terms()) out.push_back({t.mono * Monomial::power(x, i), t.coef});
        g -= d;
        g *= inv;
    }
    return Poly::from_terms(std::move(out));
}

// Heuristic gcd over Z for integer polynomials (Char, Geddes, Gonnet). The
// result carries the integer content; nullopt when the evaluation sizes get
// too large or no candidate passes trial division.
std::optional<Poly> heuristic_gcd(const Poly& a0, const Poly& b0) {
    Integer ca = a0.content().get_num(), cb = b0.content().get_num();
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a0.is_constant() || b0.is_constant()) return Poly(Rational(c));
    Poly a = a0.primitive(), b = b0.primitive();
    VarMask s = a.support() | b.support();
    Var x = Var::z;
    unsigned dmax = 0;
    for (Var v : kAllVars) {
        if (!(s & mask_of(v))) continue;
        x = v;
        dmax = std::max(a.degree(v), b.degree(v));
        break;
    }
    Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * dmax > (1u << 17)) return std::nullopt;
        Poly ae = a.substitute(x, Rational(xi)), be = b.substitute(x, Rational(xi));
        if (!ae.is_zero() && !be.is_zero()) {
            auto g = heuristic_gcd(ae, be);
            if (!g) return std::nullopt;
            Poly G = genpoly(*g, xi, x);
            if (!G.is_zero()) {
                G = G.primitive();
                if (a.divide_exact(G) && b.divide_exact(G)) return G * Rational(c);
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

Poly gcd_core(const Poly& a, const Poly& b, std::mt19937_64& rng) {
    if (a.is_constant() || b.is_constant()) return Poly(1);
    VarMask sa = a.support(), sb = b.support();
    for (Var v : kAllVars) {
        if ((sa & mask_of(v)) && !(sb & mask_of(v))) return fold_coefficients(b.primitive(), a, v);
        if ((sb & mask_of(v)) && !(sa & mask_of(v))) return fold_coefficients(a.primitive(), b, v);
    }
    if (a.size() <= b.size()) {
        if (b.divide_exact(a)) return a.primitive();
    } else if (a.divide_exact(b)) {
        return b.primitive();
    }

    std::optional<Var> main;
    unsigned best = 0;
    bool all_zero = true;
    for (Var v : kAllVars) {
        if (!(sa & mask_of(v))) continue;
        auto bound = gcd_degree_bound(a, b, v, rng);
        if (bound && *bound == 0) continue;
        all_zero = false;
        unsigned d = std::min(a.degree(v), b.degree(v));
        if (!main || d < best) {
            main = v;
            best = d;
        }
    }
    if (all_zero) return Poly(1);
    if (auto h = heuristic_gcd(a.primitive(), b.primitive())) return h->primitive();
    Var x = *main;

    Poly ca = content_in(a, x), cb = content_in(b, x);
    Poly cg = gcd(ca, cb);
    Poly pa = a.exact_quotient(ca), pb = b.exact_quotient(cb);
    CoeffVec va = pa.coefficients(x), vb = pb.coefficients(x);
    if (deg(va) < deg(vb)) std::swap(va, vb);
    CoeffVec last = subresultant_last(std::move(va), std::move(vb));
    Poly g = Poly::from_coefficients(x, last);
    if (g.degree(x) > 0) g = g.exact_quotient(content_in(g, x));
    else g = Poly(1);
    return (g * cg).primitive();
}

} // namespace

Poly content_in(const Poly& p, Var v) {
    if (!p.contains(v)) return p.is_zero() ? Poly(1) : p.primitive();
    return fold_coefficients(Poly{}, p, v);
}

Poly gcd(const Poly& x, const Poly& y) {
    if (x.is_zero()) return y.primitive();
    if (y.is_zero()) return x.primitive();
    Monomial mx = x.monomial_content(), my = y.monomial_content();
    Poly a = mx.is_one() ? x : x.exact_quotient(Poly::monomial(mx, 1));
    Poly b = my.is_one() ? y : y.exact_quotient(Poly::monomial(my, 1));
    std::mt19937_64 rng(0x5eedULL ^ (x.size() * 1315423911ULL) ^ y.size());
    Poly g = gcd_core(a, b, rng);
    return g.shifted(Monomial::gcd(mx, my)).primitive();
}

std::vector<Poly> squarefree_decomposition(const Poly& p, Var v) {
    std::vector<Poly> out;
    if (p.degree(v) == 0) return out;
    Poly q = p.exact_quotient(content_in(p, v));
    Poly dq = q.derivative(v);
    Poly bq = gcd(q, dq);
    Poly c = q.exact_quotient(bq);
    Poly d = dq.exact_quotient(bq) - c.derivative(v);
    while (c.degree(v) > 0) {
        Poly a = gcd(c, d);
        out.push_back(a);
        c = c.exact_quotient(a);
        d = d.exact_quotient(a) - c.derivative(v);
    }
    while (!out.empty() && out.back().degree(v) == 0) out.pop_back();
    return out;
}

} // namespace specpot
