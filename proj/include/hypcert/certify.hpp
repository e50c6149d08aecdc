#ifndef HYPCERT_CERTIFY_HPP
#define HYPCERT_CERTIFY_HPP

// Exclusion certificates for adjoint trace fields of rank 2 hypergeometric
// local systems, rendered as ordered lists of exactly checked steps.

#include "hypcert/ratcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypcert {

struct CertificateStep {
    std::string statement;
    std::string witness;
    bool pass = false;
};

struct CertificateReport {
    std::string claim;
    std::vector<CertificateStep> steps;
    /// Set when a failing hypothesis stops the argument early.
    std::optional<std::string> stopped;
    bool verdict() const;
};

/// Discriminant of Q(zeta_24 + zeta_24^{-1}); checked against 2^8 3^2 at compile time.
inline constexpr long kRealCyclotomic24Discriminant = 2304;

/// No irreducible rank 2 hypergeometric datum has adjoint trace field Q(sqrt D):
/// pass requires D odd, squarefree and >= 7.
CertificateReport certify_quadratic_exclusion(const Integer& d);

/// disc is taken to be the discriminant of a totally real cubic field; pass
/// means its Galois closure is S_3, so it is no adjoint trace field.
CertificateReport certify_nonabelian_cubic(const Integer& disc);

/// Ramification set of a quaternion algebra over Q; pass iff it is neither
/// empty nor {2, 3}, the two discriminants of arithmetic triangle groups over Q.
CertificateReport certify_krammer_route(const std::vector<long>& ramified_primes);

/// Singular points and local exponents of the Krammer operator.
CertificateReport audit_krammer_singularities();

/// One row of the bundled arithmetic triangle group table; 0 stands for a cusp.
struct TriangleTableRow {
    long e1 = 0, e2 = 0, e3 = 0;
    long base_field_degree = 1;
    std::string discriminant;
};

const std::vector<TriangleTableRow>& triangle_table();

/// Row for the signature, orders in any order, 0 meaning a cusp.
std::optional<TriangleTableRow> find_triangle_row(long l, long m, long r);

}  // namespace hypcert

#endif
