#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "specpot/error.hpp"
#include "specpot/io/document.hpp"
#include "specpot/io/expr.hpp"

using namespace specpot;

namespace {

struct Options {
    std::string family, nu, nodes, P1, P2, F, in, out, format = "json", range = "-4:4", interval = "R";
    int gauge_case = 1;
    unsigned kmax = 3, samples = 101;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

Rational rational_arg(const std::string& s, const char* what) {
    auto q = parse_rational(s);
    if (!q) throw UsageError(std::string(what) + " must be a rational p/q, got '" + s + "'");
    return *q;
}

Poly poly_arg(const std::string& s, const char* what) {
    RatFun f = parse_ratfun(s);
    if (!f.is_polynomial() || f.den().constant_term() != 1)
        throw UsageError(std::string(what) + " must be a polynomial");
    return f.num();
}

PotentialResult generate(const Options& o) {
    auto fam = family_from_name(o.family);
    if (!fam) throw UsageError("unknown family '" + o.family + "'");
    bool numeric = !o.nu.empty();
    switch (*fam) {
    case Family::F1: {
        auto nodes = parse_nodes1(o.nodes);
        return numeric ? gen_family1(nodes, rational_arg(o.nu, "--nu"))
                       : gen_family1(nodes, RatFun::variable(Var::nu));
    }
    case Family::F2: {
        auto nodes = parse_nodes2(o.nodes);
        return numeric ? gen_family2(nodes, rational_arg(o.nu, "--nu"))
                       : gen_family2(nodes, RatFun::variable(Var::nu));
    }
    case Family::F3log:
        if (o.P1.empty()) throw UsageError("--P1 is required for family 3log");
        return gen_family3_log({poly_arg(o.P1, "--P1"), o.P2.empty() ? Poly() : poly_arg(o.P2, "--P2")});
    case Family::F3poly:
        if (o.F.empty()) throw UsageError("--F is required for family 3poly");
        return gen_family3_poly(poly_arg(o.F, "--F"));
    case Family::F4: return gen_family4();
    case Family::Singular: {
        if (o.gauge_case < 1 || o.gauge_case > 4) throw UsageError("--case must be 1, 2, 3 or 4");
        CoeffField nu = numeric ? CoeffField(rational_arg(o.nu, "--nu")) : RatFun::variable(Var::nu);
        return singular_potential(static_cast<GaugeCase>(o.gauge_case), nu);
    }
    }
    throw UsageError("unknown family");
}

int run_spectrum(const Options& o) {
    auto iv = interval_from_name(o.interval);
    if (!iv) throw UsageError("--interval must be R, R+ or R-");
    PotentialDocument doc = from_json(read_file(o.in));
    SpectrumReport rep = compute_spectrum(doc.result, o.kmax);
    if (!rep.discrete) {
        std::cout << rep.note << "\n";
        return 0;
    }
    std::cout << "E0\tpsi\n";
    for (const auto& p : rep.eigenpairs)
        if (p.l2.at(*iv)) std::cout << to_string(p.E0) << "\t" << p.psi.to_string() << "\n";
    for (const auto& c : rep.candidates.candidates)
        if (c.degenerate) std::cerr << "degenerate candidate E0 = " << to_string(c.energy) << "\n";
    if (!o.out.empty()) {
        doc.eigenpairs = rep.eigenpairs;
        emit(to_json(doc), o.out);
    }
    return 0;
}

int run_render(const Options& o) {
    PotentialDocument doc = from_json(read_file(o.in));
    if (o.format == "json") emit(to_json(doc), o.out);
    else if (o.format == "latex") emit(render_latex(doc), o.out);
    else if (o.format == "plotdata") {
        auto colon = o.range.find(':');
        if (colon == std::string::npos) throw UsageError("--range must be LO:HI");
        Rational lo = rational_arg(o.range.substr(0, colon), "range bound");
        Rational hi = rational_arg(o.range.substr(colon + 1), "range bound");
        emit(plot_data(doc, lo, hi, o.samples), o.out);
    } else {
        throw UsageError("--format must be json, latex or plotdata");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generation and spectra of quantum-integrable rational potentials"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "generate a potential");
    gen->add_option("--family", o.family, "1, 2, 3log, 3poly, 4 or singular")->required();
    gen->add_option("--nu", o.nu, "rational nu; symbolic when omitted");
    gen->add_option("--nodes", o.nodes, "\"(k,+,-);...\" or \"(k,+);...\"");
    gen->add_option("--P1", o.P1, "polynomial in t");
    gen->add_option("--P2", o.P2, "polynomial in t");
    gen->add_option("--F", o.F, "polynomial in z");
    gen->add_option("--case", o.gauge_case, "gauge case of a singular potential");
    gen->add_option("--out", o.out, "output file, stdout when omitted");

    auto* verify_cmd = app.add_subcommand("verify", "re-derive V and check the exact residual");
    verify_cmd->add_option("--in", o.in)->required();

    auto* spectrum = app.add_subcommand("spectrum", "closed-form eigenfunctions");
    spectrum->add_option("--in", o.in)->required();
    spectrum->add_option("--kmax", o.kmax, "candidate index bound");
    spectrum->add_option("--interval", o.interval, "R, R+ or R-");
    spectrum->add_option("--out", o.out, "write the document with its eigenpairs");

    auto* render = app.add_subcommand("render", "emit a document");
    render->add_option("--in", o.in)->required();
    render->add_option("--format", o.format, "json, latex or plotdata");
    render->add_option("--range", o.range, "LO:HI");
    render->add_option("--samples", o.samples);
    render->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            emit(to_json(PotentialDocument{generate(o), {}}), o.out);
        } else if (verify_cmd->parsed()) {
            PotentialDocument doc = from_json(read_file(o.in));
            specpot::verify(doc.result);
            for (const auto& p : doc.eigenpairs)
                if (!eigen_residual(doc.result.V, p.E0, p.psi).is_zero())
                    throw NonzeroResidual("eigenfunction at E0 = " + to_string(p.E0));
            std::cout << "ok: psi'' + (V + E) psi vanishes identically\n";
        } else if (spectrum->parsed()) {
            return run_spectrum(o);
        } else if (render->parsed()) {
            return run_render(o);
        }
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.mathematical() ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
