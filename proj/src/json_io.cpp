#include "hypcert/json_io.hpp"

#include <sstream>

namespace hypcert {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const std::vector<Rational>& qs) {
    Json j = Json::array();
    for (const auto& q : qs) j.push_back(to_string(q));
    return j;
}

Json to_json(const std::vector<ResidueClass>& xs) {
    Json j = Json::array();
    for (const auto& x : xs) j.push_back(to_string(x));
    return j;
}

Json to_json(const CyclotomicNumber& v) { return {{"conductor", v.conductor()}, {"value", to_string(v)}}; }

Json to_json(const CyclotomicMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const std::vector<JordanEntry>& js) {
    Json out = Json::array();
    for (const auto& e : js) out.push_back({{"exponent", to_string(e.exponent)}, {"blocks", e.blocks}});
    return out;
}

Json to_json(const SubfieldDescriptor& f) {
    return {{"conductor", f.conductor},
            {"stabilizer", f.stabilizer},
            {"degree", f.degree()},
            {"quadratic_subfields", quadratic_subfields(f)},
            {"abelian", true}};
}

Json to_json(const CertificateReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) steps.push_back({{"statement", s.statement}, {"witness", s.witness}, {"pass", s.pass}});
    Json j{{"claim", r.claim}, {"steps", std::move(steps)}};
    if (r.stopped) j["stopped"] = *r.stopped;
    j["verdict"] = r.verdict() ? "pass" : "fail";
    return j;
}

Json to_json(const EnumerationRow& r) {
    const auto h = r.datum();
    Json j{{"conductor", r.conductor},
           {"a", to_json(h.a())},
           {"b", to_json(h.b())},
           {"classification", to_string(r.classification)},
           {"triangle_signature", {r.signature.l, r.signature.m, r.signature.r}}};
    j["adjoint_field"] = r.adjoint_field ? to_json(*r.adjoint_field) : Json();
    j["generator_field"] = r.generator_field ? to_json(*r.generator_field) : Json();
    return j;
}

Json to_json(const EnumerationSummary& s) {
    Json classes = Json::object();
    for (const auto& [c, n] : s.by_class) classes[to_string(c)] = n;
    Json degrees = Json::object();
    for (const auto& [d, n] : s.by_degree) degrees[std::to_string(d)] = n;
    Json quad = Json::object();
    for (const auto& [d, n] : s.quadratic_fields) quad[std::to_string(d)] = n;
    Json examples = Json::array();
    for (const auto& r : s.discrepancy_examples) examples.push_back(to_string(r.datum()));
    Json forbidden = Json::array();
    for (const auto& r : s.forbidden) forbidden.push_back(to_json(r));
    return {{"conductor_max", s.n_max},
            {"rows", s.rows},
            {"by_class", std::move(classes)},
            {"adjoint_field_degrees", std::move(degrees)},
            {"quadratic_adjoint_fields", std::move(quad)},
            {"generator_field_discrepancies", s.generator_discrepancies},
            {"discrepancy_examples", std::move(examples)},
            {"forbidden_quadratic_rows", std::move(forbidden)},
            {"all_abelian", s.all_abelian},
            {"verdict", s.forbidden.empty() && s.all_abelian ? "pass" : "fail"}};
}

Json to_json(const FamilyReport& r) {
    Json j{{"m", r.m}, {"s", r.s}, {"t", r.t}, {"character_order", r.order}, {"irreducible", r.irreducible}};
    Json in = Json::array();
    for (const auto& g : r.input) in.push_back(to_json(g));
    j["input"] = std::move(in);
    if (!r.irreducible) {
        j["skipped"] = "character of order <= 2: the induced tuple is reducible";
        j["verdict"] = "fail";
        return j;
    }
    Json out = Json::array();
    for (std::size_t i = 0; i < r.output.size(); ++i)
        out.push_back({{"matrix", to_json(r.output[i])},
                       {"jordan", to_json(r.jordan[i])},
                       {"determinant", to_string(r.determinants[i])}});
    j["output_rank"] = r.output.empty() ? 0 : r.output[0].rows();
    j["output"] = std::move(out);
    j["trace_field"] = to_json(r.trace_field);
    j["expected_field"] = to_json(r.expected_field);
    j["trace_field_sampled"] = {{"max_length", r.field_sample_length}, {"stable", r.field_sampled_stable}};
    j["checks"] = {{"jordan", r.jordan_ok}, {"trivial_determinant", r.det_ok}, {"trace_field", r.field_ok}};
    j["verdict"] = r.all() ? "pass" : "fail";
    return j;
}

Json to_json(const DenominatorAudit& a) {
    return {{"window", {a.window_from, a.window_to}},
            {"window_root_max", to_string(a.window_root_max)},
            {"argmax", a.argmax},
            {"root_at_mid", to_string(a.root_at_mid)},
            {"root_at_end", to_string(a.root_at_end)},
            {"d_end_digits", a.d.empty() ? 0 : a.d.back().get_str().size()},
            {"unbounded_growth", a.unbounded_growth}};
}

Json to_json(const TripleChecks& c) {
    return {{"product_identity", c.product_identity},
            {"char_poly_inf", c.char_poly_inf},
            {"char_poly_0", c.char_poly_0},
            {"pseudoreflection", c.pseudoreflection},
            {"det_g1", c.det_g1},
            {"jordan_0", c.jordan_0},
            {"jordan_inf", c.jordan_inf}};
}

namespace {

void text(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [&](const Json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if (x.is_structured()) return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !flat(v)) {
                os << pad << k << ":\n";
                text(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured() && !flat(v)) {
                os << pad << "-\n";
                text(os, v, indent + 2);
            } else {
                os << pad << "- " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

}  // namespace

std::string to_text(const Json& j) {
    std::ostringstream os;
    text(os, j, 0);
    return os.str();
}

}  // namespace hypcert
