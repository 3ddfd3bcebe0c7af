#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json_io.hpp"
#include "symchar2/parse.hpp"

namespace symchar2::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field = "gf2";
    std::string poly;
    std::string factors;
    std::string matrix;
    std::string mode = "minpoly";
    std::string form;
    std::string a;
    unsigned depth = 0;
    unsigned mult = 1;
    std::uint64_t seed = kDefaultFactorSeed;
    bool json = false;
    bool block_pairing = false;
    bool square_block = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_matrix(std::ostream& out, const std::string& label, const Matrix& m) {
    out << label << " (" << m.rows() << "x" << m.cols() << "):\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? ", " : "") << m(i, j).to_string();
        out << "]\n";
    }
}

Poly read_poly(const Field& k, const Options& o) {
    if (o.poly.empty()) throw UsageError("--poly is required");
    return parse_poly(k, o.poly);
}

FactorDecomposition decomposition(const Field& k, const Poly& f, const Options& o) {
    if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic of degree >= 1");
    if (!o.factors.empty()) return validate_factored_input(f, parse_factored(k, o.factors));
    if (k.kind() != FieldKind::Binary) throw UsageError("--factors is required over " + k.name());
    return factor(f, o.seed);
}

std::string read_text(const std::string& path, std::istream& in) {
    if (path.empty()) throw UsageError("--matrix is required");
    std::stringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open " + path);
        ss << file.rdbuf();
    }
    return ss.str();
}

Matrix read_matrix(const Field& k, const Options& o, std::istream& in) {
    const std::string text = read_text(o.matrix, in);
    io::json j;
    try {
        j = io::json::parse(text);
    } catch (const io::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    return io::matrix_from_json(k, j);
}

std::string witness(const FactorDecomposition& fd) {
    for (const auto& e : fd.entries)
        if (e.separable()) return "separable factor " + e.rho().to_string();
    for (const auto& e : fd.entries)
        if (e.multiplicity >= 2)
            return "inseparable factor " + e.rho().to_string() + " with multiplicity " + std::to_string(e.multiplicity);
    std::string s = "product of distinct inseparable irreducibles:";
    for (std::size_t i = 0; i < fd.entries.size(); ++i) s += (i ? ", " : " ") + fd.entries[i].rho().to_string();
    return s;
}

int cmd_check(const Options& o, std::ostream& out) {
    const Field k = Field::parse(o.field);
    const Poly f = read_poly(k, o);
    const auto fd = decomposition(k, f, o);
    const Decision d = decide(fd);
    const bool ok = d == Decision::Realizable;
    if (o.json) {
        io::json factors = io::json::array();
        for (const auto& e : fd.entries)
            factors.push_back({{"factor", e.rho().to_string()}, {"depth", e.depth}, {"multiplicity", e.multiplicity}});
        out << io::json{{"f", f.to_string()}, {"realizable", ok}, {"witness", witness(fd)}, {"factors", factors}}.dump(2) << "\n";
    } else {
        out << (ok ? "Realizable" : "NotRealizable") << "\n";
        out << "witness: " << witness(fd) << "\n";
    }
    return ok ? kOk : kNotRealizable;
}

void print_realization(const Realization& r, std::ostream& out) {
    out << "f: " << r.f.to_string() << "\n";
    if (!(r.target == r.f)) out << "min/char polynomial: " << r.target.to_string() << "\n";
    out << "case: " << to_string(r.plan.kind) << "\n";
    for (const auto& u : r.plan.units)
        out << "block: " << to_string(u.kind) << " modulus=" << u.modulus.to_string() << " depth=" << u.n << " multiplicity=" << u.m
            << "\n";
    if (r.plan.even) out << "block: even modulus=" << r.plan.even->to_string() << "\n";
    print_matrix(out, "M", r.M);
    out << "certificate: symmetric=" << yes_no(r.certificate.symmetric) << " min_poly=" << yes_no(r.certificate.min_poly_ok)
        << " char_poly=" << yes_no(r.certificate.char_poly_ok) << " gram=" << yes_no(r.certificate.gram_ok) << "\n";
    if (r.smaller_size_impossible)
        out << "note: no symmetric matrix of size " << r.f.degree() << " has a root of f as an eigenvalue\n";
}

int cmd_realize(const Options& o, std::ostream& out, bool eigen) {
    const Field k = Field::parse(o.field);
    const Poly f = read_poly(k, o);
    const auto fd = decomposition(k, f, o);
    const RealizeOptions opts{o.block_pairing, o.square_block};
    const Realization r = eigen ? realize_eigen(f, fd, opts) : realize(f, fd, opts);
    if (o.json) {
        out << io::to_json(r).dump(2) << "\n";
    } else {
        print_realization(r, out);
    }
    return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const Field k = Field::parse(o.field);
    const Poly f = read_poly(k, o);
    const Matrix m = read_matrix(k, o, in);
    VerifyMode mode;
    if (o.mode == "minpoly") {
        mode = VerifyMode::MinPoly;
    } else if (o.mode == "charpoly") {
        mode = VerifyMode::CharPoly;
    } else if (o.mode == "eigen") {
        mode = VerifyMode::Eigen;
    } else {
        throw UsageError("unknown --mode " + o.mode);
    }
    const VerifyReport r = verify(m, f, mode);
    if (o.json) {
        out << io::to_json(r).dump(2) << "\n";
    } else {
        out << (r.passed ? "pass" : "fail") << "\n";
        out << "symmetric: " << yes_no(r.symmetric) << "\n";
        if (r.min_poly) out << "min_poly: " << r.min_poly->to_string() << "\n";
        if (r.char_poly) out << "char_poly: " << r.char_poly->to_string() << "\n";
        for (const auto& e : r.failures) out << "failure: " << e << "\n";
    }
    return r.passed ? kOk : kValidationFailure;
}

TransferForm named_form(const Field& k, const Options& o) {
    const std::string& kind = o.form;
    if (kind == "point") return point_form(k);
    if (kind == "sep-local" || kind == "insep-local") {
        if (o.a.empty()) throw UsageError("--a is required for " + kind);
        const Scalar a = parse_scalar(k, o.a);
        return kind == "sep-local" ? sep_local_form(a, o.mult) : insep_local_form(a, o.depth, o.mult);
    }
    const Poly p = read_poly(k, o);
    if (kind == "even") return even_form(p);
    if (kind == "square") return square_block_form(p);
    if (kind == "sep-power") return sep_power_form(p, o.mult);
    if (kind == "insep-power") return insep_power_form(p, o.depth, o.mult);
    throw UsageError("unknown --form '" + kind + "'");
}

int cmd_gram(const Options& o, std::ostream& out) {
    const Field k = Field::parse(o.field);
    const TransferForm form = named_form(k, o);
    const Matrix g = gram(form);
    const auto claims = check_claims(form);
    bool all = true;
    for (bool c : claims) all = all && c;
    if (o.json) {
        out << io::json{{"form", io::to_json(form)}, {"gram", io::to_json(g)}, {"claims_hold", all}}.dump(2) << "\n";
    } else {
        for (const auto& b : form.blocks) out << "block: modulus=" << b.modulus.to_string() << " claim=" << to_string(b.claim) << "\n";
        print_matrix(out, "S", g);
        out << "claims hold: " << yes_no(all) << "\n";
    }
    return all ? kOk : kValidationFailure;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
    const Field k = Field::parse(o.field);
    const Matrix s = read_matrix(k, o, in);
    const ReductionResult r = gauss_reduce(s);
    if (o.json) {
        out << io::to_json(r).dump(2) << "\n";
    } else {
        out << "rank: " << r.rank << "\n";
        print_matrix(out, "U", r.U);
        print_matrix(out, "Q", r.Q);
        print_matrix(out, "P", r.P);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Symmetric matrices with prescribed minimal polynomial in characteristic two", "symchar2"};
    app.require_subcommand(1);

    const auto add_field = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "gf2, gf(2^m), gf(2^m):bits, f2(t), gf(2^m)(t)")->capture_default_str();
        sub->add_flag("--json", o.json, "Emit JSON");
    };
    const auto add_poly = [&](CLI::App* sub) {
        sub->add_option("--poly", o.poly, "Monic polynomial in x, e.g. (x^2+x+t)^3");
        sub->add_option("--factors", o.factors, "Factorization, e.g. (x^2+x+t)^3*(x+1)");
        sub->add_option("--seed", o.seed, "Seed for equal-degree splitting over GF(2^m)");
    };

    auto* check = app.add_subcommand("check", "Decide whether f is the minimal polynomial of a symmetric matrix");
    add_field(check);
    add_poly(check);

    auto* realize_cmd = app.add_subcommand("realize", "Build a symmetric M with min and char polynomial f");
    add_field(realize_cmd);
    add_poly(realize_cmd);
    realize_cmd->add_flag("--block-pairing", o.block_pairing, "Reduce blocks separately, last unit block with the even block");
    realize_cmd->add_flag("--square-block", o.square_block, "Use a unit form on a square remainder instead of a hyperbolic one");

    auto* eigen = app.add_subcommand("eigen", "Smallest symmetric matrix having a root of irreducible f as eigenvalue");
    add_field(eigen);
    add_poly(eigen);
    eigen->add_flag("--block-pairing", o.block_pairing, "Reduce blocks separately");

    auto* verify_cmd = app.add_subcommand("verify", "Check a matrix for symmetry and its min/char polynomial");
    add_field(verify_cmd);
    verify_cmd->add_option("--poly", o.poly, "Expected polynomial");
    verify_cmd->add_option("--matrix", o.matrix, "JSON file with the matrix, or - for stdin");
    verify_cmd->add_option("--mode", o.mode, "minpoly, charpoly or eigen")->capture_default_str();

    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a named linear form");
    add_field(gram_cmd);
    gram_cmd->add_option("--form", o.form, "even, square, point, sep-local, sep-power, insep-local, insep-power")->required();
    gram_cmd->add_option("--poly", o.poly, "Polynomial argument (g or the separable core pi)");
    gram_cmd->add_option("--a", o.a, "Scalar parameter of the local forms");
    gram_cmd->add_option("--depth", o.depth, "Inseparability depth n");
    gram_cmd->add_option("--mult", o.mult, "Multiplicity m");

    auto* reduce_cmd = app.add_subcommand("reduce", "Gauss reduction S = U^T U of a symmetric Gram matrix");
    add_field(reduce_cmd);
    reduce_cmd->add_option("--matrix", o.matrix, "JSON file with the Gram matrix, or - for stdin");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (*check) return cmd_check(o, out);
        if (*realize_cmd) return cmd_realize(o, out, false);
        if (*eigen) return cmd_realize(o, out, true);
        if (*verify_cmd) return cmd_verify(o, in, out);
        if (*gram_cmd) return cmd_gram(o, out);
        if (*reduce_cmd) return cmd_reduce(o, in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::ParseError) return kParseError;
        if (e.code() == ErrorCode::NotRealizable) return kNotRealizable;
        return kValidationFailure;
    } catch (const io::json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}

}  // namespace symchar2::cli
