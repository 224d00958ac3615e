#include "specpot/algebra/rational.hpp"

#include <cctype>

#include <mpfr.h>

#include "specpot/error.hpp"

namespace specpot {

Rational make_rational(long num, long den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<Rational> parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s, bool allow_sign) -> std::optional<Integer> {
        if (s.empty()) return std::nullopt;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return std::nullopt;
        for (std::size_t j = i; j < s.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) return std::nullopt;
        std::string digits(s.substr(s[0] == '+' ? 1 : 0));
        return Integer(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text, true);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash), true);
    auto d = parse_int(text.substr(slash + 1), false);
    if (!n || !d || *d == 0) return std::nullopt;
    return make_rational(*n, *d);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

double to_double(const Rational& q) {
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, q.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    Integer n = sqrt(q.get_num());
    Integer d = sqrt(q.get_den());
    return make_rational(n, d);
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw ZeroDenominator("0 raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return make_rational(n, d);
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational rising_factorial(const Rational& x, unsigned long n) {
    Rational r = 1;
    for (unsigned long j = 0; j < n; ++j) r *= x + j;
    return r;
}

} // namespace specpot
