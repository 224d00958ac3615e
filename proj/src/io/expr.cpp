#include "specpot/io/expr.hpp"

#include <cctype>
#include <cmath>

#include "specpot/error.hpp"

namespace specpot {

namespace {

using Kind = ExprNode::Kind;

Expr make(Kind k, std::vector<Expr> args = {}) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->args = std::move(args);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr run() {
        Expr e = sum();
        skip();
        if (pos_ != s_.size()) throw SyntaxError(pos_, "operator or end of input");
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr sum() {
        Expr e = product();
        for (;;) {
            if (accept('+')) e = make(Kind::Add, {e, product()});
            else if (accept('-')) e = make(Kind::Sub, {e, product()});
            else return e;
        }
    }
    Expr product() {
        Expr e = unary();
        for (;;) {
            if (accept('*')) e = make(Kind::Mul, {e, unary()});
            else if (accept('/')) e = make(Kind::Div, {e, unary()});
            else return e;
        }
    }
    Expr unary() {
        if (accept('-')) return make(Kind::Neg, {unary()});
        return power();
    }
    Expr power() {
        Expr e = primary();
        while (accept('^')) {
            skip();
            std::size_t start = pos_;
            bool neg = pos_ < s_.size() && s_[pos_] == '-';
            if (neg) ++pos_;
            auto digits = integer_literal();
            if (!digits) throw SyntaxError(start, "integer exponent");
            Integer v(*digits, 10);
            if (!v.fits_slong_p()) throw SyntaxError(start, "exponent in machine range");
            auto n = std::make_shared<ExprNode>();
            n->kind = Kind::Pow;
            n->exponent = neg ? -v.get_si() : v.get_si();
            n->args = {e};
            e = n;
        }
        return e;
    }
    std::optional<std::string> integer_literal() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) return std::nullopt;
        return std::string(s_.substr(start, pos_ - start));
    }
    Expr primary() {
        skip();
        std::size_t start = pos_;
        if (auto digits = integer_literal()) {
            auto n = std::make_shared<ExprNode>();
            n->kind = Kind::Integer;
            n->value = Integer(*digits, 10);
            return n;
        }
        if (accept('(')) {
            Expr e = sum();
            if (!accept(')')) throw SyntaxError(pos_, "')'");
            return e;
        }
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        if (name.empty()) throw SyntaxError(start, "number, symbol, function or '('");
        if (name == "ln" || name == "sqrt" || name == "exp") {
            if (!accept('(')) throw SyntaxError(pos_, "'('");
            Expr arg = sum();
            if (!accept(')')) throw SyntaxError(pos_, "')'");
            auto n = std::make_shared<ExprNode>();
            n->kind = Kind::Call;
            n->name = name;
            n->args = {arg};
            return n;
        }
        if (!var_from_name(name)) throw SyntaxError(start, "one of z E nu a b c d t");
        auto n = std::make_shared<ExprNode>();
        n->kind = Kind::Symbol;
        n->name = name;
        return n;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
    switch (e->kind) {
    case Kind::Add:
    case Kind::Sub: return 1;
    case Kind::Mul:
    case Kind::Div: return 2;
    case Kind::Neg: return 3;
    case Kind::Pow: return 4;
    default: return 5;
    }
}

std::string print_at(const Expr& e, int min_prec) {
    std::string out;
    switch (e->kind) {
    case Kind::Integer: out = e->value.get_str(); break;
    case Kind::Symbol: out = e->name; break;
    case Kind::Call: out = e->name + "(" + print_at(e->args[0], 0) + ")"; break;
    case Kind::Neg: out = "-" + print_at(e->args[0], 3); break;
    case Kind::Pow: out = print_at(e->args[0], 5) + "^" + std::to_string(e->exponent); break;
    case Kind::Add: out = print_at(e->args[0], 1) + "+" + print_at(e->args[1], 2); break;
    case Kind::Sub: out = print_at(e->args[0], 1) + "-" + print_at(e->args[1], 2); break;
    case Kind::Mul: out = print_at(e->args[0], 2) + "*" + print_at(e->args[1], 3); break;
    case Kind::Div: out = print_at(e->args[0], 2) + "/" + print_at(e->args[1], 3); break;
    }
    return precedence(e) < min_prec ? "(" + out + ")" : out;
}

TowerElem tower_of(const Expr& e) {
    switch (e->kind) {
    case Kind::Integer: return TowerElem(Rational(e->value));
    case Kind::Symbol: return TowerElem(RatFun::variable(*var_from_name(e->name)));
    case Kind::Neg: return -tower_of(e->args[0]);
    case Kind::Add: return tower_of(e->args[0]) + tower_of(e->args[1]);
    case Kind::Sub: return tower_of(e->args[0]) - tower_of(e->args[1]);
    case Kind::Mul: return tower_of(e->args[0]) * tower_of(e->args[1]);
    case Kind::Div: return tower_of(e->args[0]) / tower_of(e->args[1]);
    case Kind::Pow: {
        TowerElem base = tower_of(e->args[0]);
        long n = e->exponent;
        if (n < 0) {
            base = base.inverse();
            n = -n;
        }
        TowerElem out(1);
        for (long i = 0; i < n; ++i) out = out * base;
        return out;
    }
    case Kind::Call: {
        RatFun arg = to_ratfun(e->args[0]);
        if (e->name == "exp") return TowerElem::exp(arg);
        if (arg != RatFun::variable(Var::z))
            throw NonRationalCoefficient(e->name + " is supported for the argument z only");
        return e->name == "ln" ? TowerElem::log_z() : TowerElem::generator(Gen::r);
    }
    }
    return {};
}

} // namespace

Expr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string print_expr(const Expr& e) { return print_at(e, 0); }

RatFun to_ratfun(const Expr& e) {
    switch (e->kind) {
    case Kind::Integer: return RatFun(Rational(e->value));
    case Kind::Symbol: return RatFun::variable(*var_from_name(e->name));
    case Kind::Neg: return -to_ratfun(e->args[0]);
    case Kind::Add: return to_ratfun(e->args[0]) + to_ratfun(e->args[1]);
    case Kind::Sub: return to_ratfun(e->args[0]) - to_ratfun(e->args[1]);
    case Kind::Mul: return to_ratfun(e->args[0]) * to_ratfun(e->args[1]);
    case Kind::Div: {
        RatFun d = to_ratfun(e->args[1]);
        if (d.is_zero()) throw ZeroDenominator("division by zero in expression");
        return to_ratfun(e->args[0]) / d;
    }
    case Kind::Pow: {
        RatFun b = to_ratfun(e->args[0]);
        if (e->exponent < 0 && b.is_zero()) throw ZeroDenominator("zero raised to a negative power");
        return pow(b, e->exponent);
    }
    case Kind::Call: throw NonRationalCoefficient(e->name + "(...) is not a rational function");
    }
    return {};
}

RatFun parse_ratfun(std::string_view text) { return to_ratfun(parse_expr(text)); }

TowerElem to_tower(const Expr& e) { return tower_of(e); }

std::optional<double> evaluate_at(const Expr& e, double x) {
    auto arg = [&](std::size_t i) { return evaluate_at(e->args[i], x); };
    switch (e->kind) {
    case Kind::Integer: return to_double(e->value);
    case Kind::Symbol:
        if (e->name != "z") throw UnboundParameter("symbol " + e->name + " has no value");
        return x;
    case Kind::Neg: {
        auto v = arg(0);
        return v ? std::optional<double>(-*v) : std::nullopt;
    }
    case Kind::Pow: {
        auto v = arg(0);
        if (!v || (*v == 0 && e->exponent < 0)) return std::nullopt;
        return std::pow(*v, static_cast<double>(e->exponent));
    }
    case Kind::Call: {
        auto v = arg(0);
        if (!v) return std::nullopt;
        if (e->name == "exp") return std::exp(*v);
        if (*v < 0 || (*v == 0 && e->name == "ln")) return std::nullopt;
        return e->name == "ln" ? std::log(*v) : std::sqrt(*v);
    }
    default: break;
    }
    auto l = arg(0), r = arg(1);
    if (!l || !r) return std::nullopt;
    switch (e->kind) {
    case Kind::Add: return *l + *r;
    case Kind::Sub: return *l - *r;
    case Kind::Mul: return *l * *r;
    case Kind::Div:
        if (*r == 0) return std::nullopt;
        return *l / *r;
    default: return std::nullopt;
    }
}

} // namespace specpot
