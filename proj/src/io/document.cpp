#include "specpot/io/document.hpp"

#include <cctype>
#include <cstdio>

#include "json.hpp"

#include "specpot/error.hpp"
#include "specpot/io/expr.hpp"
#include "specpot/io/latex.hpp"

namespace specpot {

namespace {

using json = nlohmann::ordered_json;

constexpr std::array<Var, 5> kParams = {Var::nu, Var::a, Var::b, Var::c, Var::d};

// ---------------------------------------------------------------- node lists

class NodeLexer {
public:
    explicit NodeLexer(std::string_view s) : s_(s) {}

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ == s_.size();
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) throw SyntaxError(pos_, std::string("'") + c + "'");
        ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    unsigned natural() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 6) throw SyntaxError(start, "node index k");
        return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
    }
    int sign() {
        skip();
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) return s_[pos_++] == '+' ? 1 : -1;
        throw SyntaxError(pos_, "'+' or '-'");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

template <class Node, class Fn>
std::vector<Node> parse_list(std::string_view text, Fn read_node) {
    NodeLexer lx(text);
    std::vector<Node> out;
    do {
        lx.expect('(');
        out.push_back(read_node(lx));
        lx.expect(')');
    } while (lx.accept(';'));
    if (!lx.done()) throw SyntaxError(text.size(), "';' or end of input");
    return out;
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

// ---------------------------------------------------------------- structured polynomials

json encode_poly(const Poly& p) {
    json by_e = json::array();
    for (const Poly& ce : p.coefficients(Var::E)) {
        json by_z = json::array();
        for (const Poly& cz : ce.coefficients(Var::z)) {
            json terms = json::array();
            for (const auto& t : cz.terms()) {
                json exps = json::object();
                for (Var v : kParams)
                    if (unsigned e = t.mono.exponent(v)) exps[std::string(var_name(v))] = e;
                if (unsigned e = t.mono.exponent(Var::t)) exps["t"] = e;
                terms.push_back(json::array({json::array({t.coef.get_num().get_str(),
                                                          t.coef.get_den().get_str()}),
                                             exps}));
            }
            by_z.push_back(terms);
        }
        by_e.push_back(by_z);
    }
    return by_e;
}

Poly decode_poly(const json& j) {
    if (!j.is_array()) throw DocumentError("structured polynomial must be an array");
    std::vector<Term> terms;
    for (std::size_t e = 0; e < j.size(); ++e) {
        for (std::size_t z = 0; z < j[e].size(); ++z) {
            for (const auto& t : j[e][z]) {
                if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != 2)
                    throw DocumentError("malformed structured term");
                auto c = make_rational(Integer(t[0][0].get<std::string>()),
                                       Integer(t[0][1].get<std::string>()));
                Monomial m = Monomial::power(Var::E, static_cast<unsigned>(e)) *
                             Monomial::power(Var::z, static_cast<unsigned>(z));
                for (const auto& [name, exp] : t[1].items()) {
                    auto v = var_from_name(name);
                    if (!v) throw DocumentError("unknown variable " + name);
                    m = m * Monomial::power(*v, exp.get<unsigned>());
                }
                terms.push_back({m, c});
            }
        }
    }
    return Poly::from_terms(std::move(terms));
}

json encode_ratfun(const RatFun& f) {
    return json{{"expr", f.to_string()}, {"num", encode_poly(f.num())}, {"den", encode_poly(f.den())}};
}

RatFun decode_ratfun(const json& j, const char* field) {
    if (!j.is_object() || !j.contains("expr")) throw DocumentError(std::string(field) + " must carry expr");
    RatFun f = parse_ratfun(j["expr"].get<std::string>());
    if (j.contains("num") || j.contains("den")) {
        Poly n = decode_poly(j.at("num")), d = decode_poly(j.at("den"));
        if (!(n == f.num()) || !(d == f.den()))
            throw DocumentError(std::string(field) + ": structured form disagrees with expr");
    }
    return f;
}

std::string expect_string(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) throw DocumentError(std::string("missing string field ") + key);
    return j[key].get<std::string>();
}

Poly parse_poly_field(const std::string& s, const char* key) {
    RatFun f = parse_ratfun(s);
    if (!f.is_polynomial() || f.den().constant_term() != 1)
        throw DocumentError(std::string(key) + " must be a polynomial");
    return f.num();
}

std::string format_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::vector<NodeSpec1> parse_nodes1(std::string_view text) {
    return parse_list<NodeSpec1>(text, [](NodeLexer& lx) {
        NodeSpec1 n;
        n.k = lx.natural();
        lx.expect(',');
        n.eps1 = lx.sign();
        lx.expect(',');
        n.eps2 = lx.sign();
        return n;
    });
}

std::vector<NodeSpec2> parse_nodes2(std::string_view text) {
    return parse_list<NodeSpec2>(text, [](NodeLexer& lx) {
        NodeSpec2 n;
        n.k = lx.natural();
        lx.expect(',');
        n.eps = lx.sign();
        return n;
    });
}

std::string format_nodes(const std::vector<NodeSpec1>& nodes) {
    std::string out;
    for (const auto& n : nodes)
        out += (out.empty() ? "" : ";") + std::string("(") + std::to_string(n.k) + "," + sign_str(n.eps1) +
               "," + sign_str(n.eps2) + ")";
    return out;
}

std::string format_nodes(const std::vector<NodeSpec2>& nodes) {
    std::string out;
    for (const auto& n : nodes)
        out += (out.empty() ? "" : ";") + std::string("(") + std::to_string(n.k) + "," + sign_str(n.eps) + ")";
    return out;
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::F1, Family::F2, Family::F3log, Family::F3poly, Family::F4, Family::Singular})
        if (family_name(f) == name) return f;
    return std::nullopt;
}

ClosedForm closed_form_from_tower(const TowerElem& t) {
    if (t.is_zero() || t.terms().size() != 1) throw DocumentError("eigenfunction is not of the form e^q z^g R");
    const auto& [key, coef] = *t.terms().begin();
    if (key.log != 0 || (key.mask != 0 && key.mask != gen_bit(Gen::r)))
        throw DocumentError("eigenfunction is not of the form e^q z^g R");
    return ClosedForm{t.carrier(), key.mask ? Rational(1, 2) : Rational(0), coef};
}

std::string to_json(const PotentialDocument& doc) {
    const PotentialResult& r = doc.result;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = family_name(r.family);
    j["gauge_case"] = static_cast<int>(r.gauge_case);
    j["nu"] = r.nu.to_string();
    if (!r.nodes1.empty()) j["nodes"] = format_nodes(r.nodes1);
    if (!r.nodes2.empty()) j["nodes"] = format_nodes(r.nodes2);
    if (r.log_pair) {
        j["P1"] = r.log_pair->P1.to_string();
        j["P2"] = r.log_pair->P2.to_string();
    }
    if (r.F) j["F"] = r.F->to_string();
    j["M"] = r.M ? encode_ratfun(*r.M) : json(nullptr);
    j["H"] = r.H ? encode_ratfun(*r.H) : json(nullptr);
    j["V"] = encode_ratfun(r.V);
    if (r.structure) {
        j["w"] = r.structure->w.to_string();
        json roots = json::array();
        for (const auto& root : r.structure->roots)
            roots.push_back(json{{"value", root.value.to_string()}, {"multiplicity", root.multiplicity}});
        j["w_roots"] = roots;
    } else {
        j["w"] = nullptr;
        j["w_roots"] = json::array();
    }
    json pairs = json::array();
    for (const auto& p : doc.eigenpairs) {
        json l2 = json::object();
        for (Interval iv : {Interval::R, Interval::RPlus, Interval::RMinus})
            l2[interval_name(iv)] = p.l2.count(iv) ? p.l2.at(iv) : false;
        pairs.push_back(json{{"E0", specpot::to_string(p.E0)}, {"psi", p.psi.to_string()}, {"l2", l2}});
    }
    j["eigenpairs"] = pairs;
    return j.dump(2) + "\n";
}

PotentialDocument from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object()) throw DocumentError("document must be an object");
        if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
            throw DocumentError("unsupported schema_version");
        PotentialDocument doc;
        PotentialResult& r = doc.result;
        auto fam = family_from_name(expect_string(j, "family"));
        if (!fam) throw DocumentError("unknown family");
        r.family = *fam;
        int gc = j.at("gauge_case").get<int>();
        if (gc < 1 || gc > 4) throw DocumentError("gauge_case out of range");
        r.gauge_case = static_cast<GaugeCase>(gc);
        r.nu = parse_ratfun(expect_string(j, "nu"));
        if (r.nu.contains(Var::z) || r.nu.contains(Var::E)) throw DocumentError("nu must be free of z and E");
        if (j.contains("nodes")) {
            std::string nodes = expect_string(j, "nodes");
            if (r.family == Family::F1) r.nodes1 = parse_nodes1(nodes);
            else if (r.family == Family::F2) r.nodes2 = parse_nodes2(nodes);
            else throw DocumentError("nodes given for a family without nodes");
        }
        if (j.contains("P1"))
            r.log_pair = LogPolyPair{parse_poly_field(expect_string(j, "P1"), "P1"),
                                     parse_poly_field(expect_string(j, "P2"), "P2")};
        if (j.contains("F")) r.F = parse_poly_field(expect_string(j, "F"), "F");
        if (!j.at("M").is_null()) r.M = decode_ratfun(j["M"], "M");
        if (!j.at("H").is_null()) r.H = decode_ratfun(j["H"], "H");
        r.V = decode_ratfun(j.at("V"), "V");
        if (r.H && r.M) {
            std::vector<CoeffField> candidates;
            for (const auto& root : j.at("w_roots")) candidates.push_back(parse_ratfun(root.at("value").get<std::string>()));
            r.structure = check_H_structure(*r.H, *r.M, candidates);
        }
        for (const auto& p : j.at("eigenpairs")) {
            EigenPair pair;
            auto e0 = parse_rational(p.at("E0").get<std::string>());
            if (!e0) throw DocumentError("E0 must be a rational p/q");
            pair.E0 = *e0;
            pair.psi = closed_form_from_tower(to_tower(parse_expr(p.at("psi").get<std::string>())));
            for (Interval iv : {Interval::R, Interval::RPlus, Interval::RMinus})
                pair.l2[iv] = p.at("l2").at(interval_name(iv)).get<bool>();
            doc.eigenpairs.push_back(std::move(pair));
        }
        return doc;
    } catch (const json::exception& e) {
        throw DocumentError(std::string("schema violation: ") + e.what());
    }
}

std::string plot_data(const PotentialDocument& doc, const Rational& lo, const Rational& hi, unsigned samples) {
    const RatFun& V = doc.result.V;
    if (V.support() & ~mask_of(Var::z)) throw UnboundParameter("the potential has free parameters");
    for (const auto& p : doc.eigenpairs)
        if ((p.psi.q.support() | p.psi.R.support()) & ~mask_of(Var::z))
            throw UnboundParameter("an eigenfunction has free parameters");
    if (samples == 0) throw DocumentError("samples must be positive");
    std::string out = "z\tV";
    for (const auto& p : doc.eigenpairs) out += "\tpsi[" + specpot::to_string(p.E0) + "]";
    out += "\n";
    for (unsigned i = 0; i < samples; ++i) {
        Rational x = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
        std::array<Rational, kVarCount> point{};
        point[static_cast<int>(Var::z)] = x;
        out += format_cell(to_double(x)) + "\t";
        try {
            out += format_cell(to_double(V.evaluate(point)));
        } catch (const PoleAtPoint&) {
        }
        for (const auto& p : doc.eigenpairs) {
            out += "\t";
            if (auto v = p.psi.evaluate(to_double(x))) out += format_cell(*v);
        }
        out += "\n";
    }
    return out;
}

std::string render_latex(const PotentialDocument& doc) {
    const PotentialResult& r = doc.result;
    std::string out;
    out += "$$M(z,E)=" + (r.M ? latex_ratfun(*r.M) : std::string("\\infty")) + "$$\n";
    if (r.H) out += "$$H(z,E)=" + latex_ratfun(*r.H) + "$$\n";
    out += "$$" + latex_potential(r.V) + "$$\n";
    return out;
}

} // namespace specpot
