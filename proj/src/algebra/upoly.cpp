#include "specpot/algebra/upoly.hpp"

namespace specpot {

namespace {

int sign_at(const QPoly& p, const std::optional<Rational>& x, int infinity_sign) {
    if (x) return sgn(p.evaluate(*x));
    int s = sgn(p.lead());
    if (infinity_sign < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<QPoly>& seq, const std::optional<Rational>& x, int infinity_sign) {
    int count = 0, last = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x, infinity_sign);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

} // namespace

int count_real_roots(const QPoly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (p.degree() <= 0) return 0;
    std::vector<QPoly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return variations(seq, lo, -1) - variations(seq, hi, +1);
}

} // namespace specpot
