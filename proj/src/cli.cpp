#include "hypcert/cli.hpp"

#include "hypcert/json_io.hpp"
#include "hypcert/tracefield.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

namespace hypcert {

namespace {

Integer parse_integer(const std::string& s) {
    Integer n;
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos || n.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
        throw DomainError("malformed integer '" + s + "'");
    return n;
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        const Integer n = parse_integer(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (!n.fits_slong_p()) throw DomainError("integer out of range in '" + s + "'");
        out.push_back(n.get_si());
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

HypergeometricDatum parse_datum(const std::string& a, const std::string& b) {
    auto da = parse_rational_list(a), db = parse_rational_list(b);
    if (da.size() != db.size() || da.empty()) throw DomainError("--a and --b need the same positive number of entries");
    return HypergeometricDatum::from_rationals(da, db);
}

Json datum_json(const HypergeometricDatum& h) { return {{"a", to_json(h.a())}, {"b", to_json(h.b())}}; }

// (a; b) translated so that 0 is a b parameter
HypergeometricDatum normalized(const HypergeometricDatum& h) { return h.translated(-h.b()[0]); }

long cusp_as_zero(long e) { return e == 1 ? 0 : e; }

struct Options {
    bool json = false;
    std::string a, b, init = "1,0", op = "krammer", integer, primes, label;
    long terms = 10, from = 100, to = 400, m = 7, s = 1, t = 2, conductor_max = 60;
    int workers = 0;
    bool control = false;
    std::string out_path;
};

struct Result {
    Json doc;
    int code = 0;
};

Result series_solve(const Options& o) {
    const auto init = parse_rational_list(o.init);
    DifferentialOperator op = krammer_operator();
    if (o.op == "hyp") {
        const auto b = parse_rational_list(o.b);
        op = hyp_operator(parse_rational_list(o.a), b);
        // with a lower parameter 1 the operator is z times one regular at 0
        if (std::find(b.begin(), b.end(), Rational(1)) != b.end()) op = op.divided_by_z();
    }
    const auto f = solve_at_ordinary_point(op, init, o.terms);
    Json j{{"operator", to_string(op)}, {"initial", to_json(init)}, {"terms", o.terms}, {"coefficients", to_json(f.coeffs)}};
    return {j, 0};
}

Result series_audit(const Options& o) {
    if (o.from < 1 || o.to < o.from) throw DomainError("audit window needs 1 <= from <= to");
    SeriesSolution f;
    Json j = Json::object();
    if (o.control) {
        f = pochhammer_series({}, {}, o.to);
        j["series"] = "exp(z)";
    } else {
        f = solve_at_ordinary_point(krammer_operator(), parse_rational_list(o.init), o.to);
        j["series"] = "krammer";
        j["initial"] = to_json(parse_rational_list(o.init));
    }
    j["audit"] = to_json(denominator_audit(f, o.from, o.to));
    return {j, 0};
}

Result hyper_classify(const Options& o) {
    const auto h = parse_datum(o.a, o.b);
    Json j = datum_json(h);
    j["rank"] = h.rank();
    j["conductor"] = h.conductor();
    j["irreducible"] = is_irreducible(h);
    const auto k = is_kummer_induced(h);
    j["kummer_induced"] = k ? Json(*k) : Json();
    if (h.rank() == 2) {
        const auto n = normalized(h);
        j["classification"] = to_string(classify_rank2(n));
        const auto e = local_exponents(n);
        j["local_exponents"] = {{"lambda", to_string(e.lambda)}, {"mu", to_string(e.mu)}, {"nu", to_string(e.nu)}};
        const auto sig = triangle_signature(n);
        j["triangle_signature"] = to_string(sig);
        const auto row = find_triangle_row(cusp_as_zero(sig.l), cusp_as_zero(sig.m), cusp_as_zero(sig.r));
        j["arithmetic_triangle_table"] = row ? Json{{"base_field_degree", row->base_field_degree}, {"discriminant", row->discriminant}} : Json();
    }
    return {j, 0};
}

Result hyper_monodromy(const Options& o) {
    const auto h = parse_datum(o.a, o.b);
    const auto t = monodromy_triple(h);
    const auto c = check_triple(h, t);
    Json j = datum_json(h);
    j["conductor"] = t.conductor;
    j["g0"] = to_json(t.g0);
    j["g1"] = to_json(t.g1);
    j["gInf"] = to_json(t.gInf);
    j["checks"] = to_json(c);
    j["verdict"] = c.all() ? "pass" : "fail";
    return {j, c.all() ? 0 : 1};
}

Result field_trace(const Options& o) {
    return {to_json(canonical_subfield(trace_field_rigid(parse_datum(o.a, o.b)))), 0};
}

Result field_adjoint(const Options& o) {
    const auto h = parse_datum(o.a, o.b);
    if (h.rank() != 2) throw DomainError("field adjoint: rank must be 2");
    if (!is_irreducible(h)) throw DomainError("field adjoint: datum is reducible");
    Json j = to_json(canonical_subfield(adjoint_trace_field_rank2(h)));
    j["generator_field"] = to_json(canonical_subfield(generator_adjoint_trace_field(h)));
    return {j, 0};
}

Result midconv_verify(const Options& o) {
    const auto r = verify_family(o.m, o.s, o.t);
    Json j = to_json(r);
    if (!o.label.empty()) j["label"] = o.label;
    return {j, r.all() ? 0 : 1};
}

Result certificate(const CertificateReport& r) { return {to_json(r), r.verdict() ? 0 : 1}; }

Result enumerate(const Options& o) {
    if (o.conductor_max < 1) throw DomainError("--conductor-max must be >= 1");
    const auto rows = enumerate_rank2(o.conductor_max, o.workers);
    if (!o.out_path.empty()) {
        std::ofstream f(o.out_path);
        if (!f) throw DomainError("cannot open '" + o.out_path + "' for writing");
        for (const auto& r : rows) f << to_json(r).dump() << '\n';
    }
    const auto s = summarize(rows, o.conductor_max);
    Json j = to_json(s);
    if (!o.out_path.empty()) j["rows_file"] = o.out_path;
    return {j, s.forbidden.empty() && s.all_abelian ? 0 : 1};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact hypergeometric monodromy, trace fields, G-series and certificates", "hypcert"};
    app.require_subcommand(1);
    Options o;
    std::function<Result()> action;

    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<Result()> f) {
        auto* c = parent->add_subcommand(name, desc);
        c->add_flag("--json", o.json, "Emit one JSON document");
        c->callback([&action, f] { action = f; });
        return c;
    };
    auto datum_opts = [&](CLI::App* c) {
        c->add_option("--a", o.a, "Comma separated rationals")->required();
        c->add_option("--b", o.b, "Comma separated rationals")->required();
    };

    auto* series = app.add_subcommand("series", "Power series solutions")->require_subcommand(1);
    auto* solve = leaf(series, "solve", "Solve at the ordinary point 0", [&] { return series_solve(o); });
    solve->add_option("--operator", o.op, "krammer or hyp")->check(CLI::IsMember({"krammer", "hyp"}));
    solve->add_option("--a", o.a, "Upper parameters for hyp");
    solve->add_option("--b", o.b, "Lower parameters for hyp");
    solve->add_option("--init", o.init, "Initial coefficients a0,a1,...");
    solve->add_option("--terms", o.terms, "Truncation order")->check(CLI::NonNegativeNumber);
    auto* audit = leaf(series, "audit", "Denominator growth audit", [&] { return series_audit(o); });
    audit->add_option("--from", o.from, "Window start");
    audit->add_option("--to", o.to, "Window end");
    audit->add_option("--init", o.init, "Initial coefficients of the Krammer solution");
    audit->add_flag("--control", o.control, "Audit exp(z) instead");

    auto* hyper = app.add_subcommand("hyper", "Hypergeometric data")->require_subcommand(1);
    datum_opts(leaf(hyper, "classify", "Irreducibility, Kummer induction, rank 2 class", [&] { return hyper_classify(o); }));
    datum_opts(leaf(hyper, "monodromy", "Explicit monodromy triple and its identities", [&] { return hyper_monodromy(o); }));

    auto* field = app.add_subcommand("field", "Trace fields")->require_subcommand(1);
    datum_opts(leaf(field, "trace", "Trace field of the monodromy", [&] { return field_trace(o); }));
    datum_opts(leaf(field, "adjoint", "Adjoint trace field, rank 2", [&] { return field_adjoint(o); }));

    auto* mc = app.add_subcommand("midconv", "Middle convolution")->require_subcommand(1);
    auto* verify = leaf(mc, "verify", "Check the middle convolution of a double cover tuple", [&] { return midconv_verify(o); });
    verify->add_option("--m", o.m, "Root of unity order")->required();
    verify->add_option("--s", o.s, "Character exponent")->required();
    verify->add_option("--t", o.t, "Character exponent")->required();
    verify->add_option("--label", o.label, "Puncture configuration label, reported only");

    auto* cert = app.add_subcommand("certify", "Certificates")->require_subcommand(1);
    leaf(cert, "quadratic", "No Q(sqrt D) adjoint trace field", [&] { return certificate(certify_quadratic_exclusion(parse_integer(o.integer))); })
        ->add_option("--d", o.integer, "Odd squarefree D >= 7")
        ->required();
    leaf(cert, "cubic", "Non-abelian cubic field", [&] { return certificate(certify_nonabelian_cubic(parse_integer(o.integer))); })
        ->add_option("--disc", o.integer, "Field discriminant")
        ->required();
    leaf(cert, "krammer", "Quaternion discriminant route", [&] { return certificate(certify_krammer_route(parse_long_list(o.primes))); })
        ->add_option("--primes", o.primes, "Ramified primes, comma separated")
        ->required();
    leaf(cert, "singularities", "Singularities and exponents of the Krammer operator", [&] { return certificate(audit_krammer_singularities()); });

    auto* en = leaf(&app, "enumerate", "Census of rank 2 data", [&] { return enumerate(o); });
    en->add_option("--conductor-max", o.conductor_max, "Conductor bound");
    en->add_option("--out", o.out_path, "Write one JSON row per line");
    en->add_option("--workers", o.workers, "Threads (default: all)")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (!action) {
        err << "error: no command given\n";
        return 2;
    }
    try {
        const auto r = action();
        if (o.json)
            out << r.doc.dump(2) << "\n";
        else
            out << to_text(r.doc);
        return r.code;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hypcert
