#include "specpot/algebra/tower.hpp"

#include "specpot/error.hpp"

namespace specpot {

RatFun generator_square(Gen g) {
    switch (g) {
    case Gen::r: return RatFun::variable(Var::z);
    case Gen::gamma: return -RatFun::variable(Var::E);
    case Gen::s: return RatFun(Poly::variable(Var::z) + Poly::variable(Var::E));
    case Gen::i: return RatFun(-1);
    }
    return {};
}

RatFun generator_log_derivative(Gen g, Var v) {
    // (g^2)_v / (2 g^2)
    RatFun sq = generator_square(g);
    RatFun d = sq.derivative(v);
    if (d.is_zero()) return {};
    return d / (sq * RatFun(2));
}

TowerElem::TowerElem(RatFun c) {
    if (!c.is_zero()) terms_.emplace(TowerKey{}, std::move(c));
}

TowerElem TowerElem::generator(Gen g) { return monomial({0, gen_bit(g)}, RatFun(1)); }

TowerElem TowerElem::log_z() { return monomial({1, 0}, RatFun(1)); }

TowerElem TowerElem::monomial(TowerKey key, RatFun coef) {
    TowerElem t;
    if (!coef.is_zero()) t.terms_.emplace(key, std::move(coef));
    return t;
}

TowerElem TowerElem::exp(RatFun q) {
    TowerElem t(RatFun(1));
    t.carrier_ = std::move(q);
    return t;
}

RatFun TowerElem::coefficient(TowerKey key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? RatFun() : it->second;
}

bool TowerElem::is_rational() const {
    if (!carrier_.is_zero() && !terms_.empty()) return false;
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == TowerKey{});
}

RatFun TowerElem::as_rational() const {
    if (!is_rational()) throw NonRationalCoefficient("tower element is not a rational function");
    return terms_.empty() ? RatFun() : terms_.begin()->second;
}

bool TowerElem::has_log() const { return log_degree() > 0; }

GenMask TowerElem::generators() const {
    GenMask m = 0;
    for (const auto& [k, c] : terms_) m |= k.mask;
    return m;
}

unsigned TowerElem::log_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.log);
    return d;
}

void TowerElem::add_term(TowerKey key, RatFun c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TowerElem TowerElem::operator-() const {
    TowerElem r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

TowerElem& TowerElem::operator+=(const TowerElem& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (!(carrier_ == o.carrier_))
        throw IncompatibleCarrier("exp(" + carrier_.to_string() + ") vs exp(" +
                                  o.carrier_.to_string() + ")");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& o) { return *this += -o; }

TowerElem operator*(const TowerElem& x, const TowerElem& y) {
    TowerElem r;
    if (x.is_zero() || y.is_zero()) return r;
    r.carrier_ = x.carrier_ + y.carrier_;
    for (const auto& [kx, cx] : x.terms_) {
        for (const auto& [ky, cy] : y.terms_) {
            RatFun c = cx * cy;
            GenMask common = kx.mask & ky.mask;
            for (Gen g : kAllGens)
                if (common & gen_bit(g)) c *= generator_square(g);
            r.add_term({kx.log + ky.log, static_cast<GenMask>(kx.mask ^ ky.mask)}, std::move(c));
        }
    }
    return r;
}

TowerElem TowerElem::scaled(const RatFun& c) const {
    if (c.is_zero()) return {};
    TowerElem r = *this;
    for (auto& [k, v] : r.terms_) v *= c;
    return r;
}

TowerElem TowerElem::without_carrier() const {
    TowerElem r = *this;
    r.carrier_ = RatFun();
    return r;
}

TowerElem TowerElem::with_carrier(RatFun q) const {
    TowerElem r = *this;
    r.carrier_ = std::move(q);
    return r;
}

TowerElem TowerElem::derivative(Var v) const {
    TowerElem r;
    r.carrier_ = carrier_;
    RatFun dq = carrier_.derivative(v);
    for (const auto& [k, c] : terms_) {
        RatFun factor = c.derivative(v);
        RatFun logs = dq;
        for (Gen g : kAllGens)
            if (k.mask & gen_bit(g)) logs += generator_log_derivative(g, v);
        factor += c * logs;
        r.add_term(k, std::move(factor));
        if (k.log > 0 && v == Var::z)
            r.add_term({k.log - 1, k.mask}, c * RatFun(Poly(static_cast<long>(k.log)), Poly::variable(Var::z)));
    }
    return r;
}

TowerElem TowerElem::conjugate(Gen g) const {
    TowerElem r = *this;
    for (auto& [k, c] : r.terms_)
        if (k.mask & gen_bit(g)) c = -c;
    return r;
}

TowerElem TowerElem::inverse() const {
    if (is_zero()) throw NotInvertible("zero tower element");
    if (has_log()) throw NotInvertible("element involves ln z");
    TowerElem y = without_carrier();
    TowerElem acc(RatFun(1));
    for (Gen g : kAllGens) {
        if (!(y.generators() & gen_bit(g))) continue;
        TowerElem conj = y.conjugate(g);
        y = y * conj;
        acc = acc * conj;
    }
    if (y.is_zero()) throw NotInvertible("zero norm");
    TowerElem r = acc.scaled(y.as_rational().inverse());
    r.carrier_ = -carrier_;
    return r;
}

TowerElem operator/(const TowerElem& x, const TowerElem& y) { return x * y.inverse(); }

TowerElem TowerElem::map_coefficients(const std::function<RatFun(const RatFun&)>& f) const {
    TowerElem r;
    for (const auto& [k, c] : terms_) r.add_term(k, f(c));
    r.carrier_ = f(carrier_);
    return r;
}

TowerElem TowerElem::eval_nu(const Rational& nu) const {
    return map_coefficients([&](const RatFun& c) { return c.eval_nu(nu); });
}

// ---------------------------------------------------------------- ESeries

ESeries operator+(const ESeries& x, const ESeries& y) {
    std::size_t n = std::min(x.order(), y.order());
    std::vector<TowerElem> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = x[j] + y[j];
    return ESeries(std::move(c));
}

ESeries operator*(const ESeries& x, const ESeries& y) {
    std::size_t n = std::min(x.order(), y.order());
    std::vector<TowerElem> c(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) c[j] += x[i] * y[j - i];
    return ESeries(std::move(c));
}

ESeries ESeries::inverse() const {
    if (c_.empty() || c_[0].is_zero()) throw ZeroLeadingCoefficient("series has zero constant term");
    TowerElem inv0 = c_[0].inverse();
    std::vector<TowerElem> out(c_.size());
    out[0] = inv0;
    for (std::size_t j = 1; j < c_.size(); ++j) {
        TowerElem acc;
        for (std::size_t i = 1; i <= j; ++i) acc += c_[i] * out[j - i];
        out[j] = -(acc * inv0);
    }
    return ESeries(std::move(out));
}

ESeries ESeries::derivative_z() const {
    std::vector<TowerElem> out;
    out.reserve(c_.size());
    for (const auto& t : c_) out.push_back(t.derivative(Var::z));
    return ESeries(std::move(out));
}

ESeries ESeries::log_derivative() const {
    if (c_.empty() || c_[0].is_zero()) throw ZeroLeadingCoefficient("series has zero constant term");
    TowerElem inv0 = c_[0].inverse();
    std::vector<TowerElem> z(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        TowerElem acc = c_[j].derivative(Var::z);
        for (std::size_t i = 1; i <= j; ++i) acc -= c_[i] * z[j - i];
        z[j] = acc * inv0;
    }
    for (auto& t : z) t = -t;
    return ESeries(std::move(z));
}

std::vector<RatFun> ESeries::rational_coefficients() const {
    std::vector<RatFun> out;
    out.reserve(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (!c_[j].is_rational())
            throw NonRationalCoefficient("coefficient of E^" + std::to_string(j) +
                                         " is not a rational function of z");
        out.push_back(c_[j].as_rational());
    }
    return out;
}

std::vector<RatFun> series_log_derivative(const ESeries& y) {
    return y.log_derivative().rational_coefficients();
}

} // namespace specpot
