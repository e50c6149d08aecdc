#ifndef HYPCERT_JSON_IO_HPP
#define HYPCERT_JSON_IO_HPP

// JSON renderings of the result types.  Exact numbers are strings ("p/q",
// or power-basis polynomials in z for cyclotomic values); key order is fixed.

#include "hypcert/certify.hpp"
#include "hypcert/enumerate.hpp"
#include "hypcert/hyper.hpp"
#include "hypcert/midconv.hpp"
#include "hypcert/series.hpp"

#include "json.hpp"

namespace hypcert {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const std::vector<Rational>& qs);
Json to_json(const std::vector<ResidueClass>& xs);
/// {"conductor": N, "value": "1 + z^2"} with z = zeta_N.
Json to_json(const CyclotomicNumber& v);
Json to_json(const CyclotomicMatrix& m);
Json to_json(const std::vector<JordanEntry>& js);
/// {"conductor", "stabilizer", "degree", "quadratic_subfields", "abelian"}
Json to_json(const SubfieldDescriptor& f);
Json to_json(const CertificateReport& r);
Json to_json(const EnumerationRow& r);
Json to_json(const EnumerationSummary& s);
Json to_json(const FamilyReport& r);
Json to_json(const DenominatorAudit& a);
Json to_json(const TripleChecks& c);

/// Indented "key: value" text for the human output mode.
std::string to_text(const Json& j);

}  // namespace hypcert

#endif
