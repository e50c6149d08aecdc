#ifndef HYPCERT_ENUMERATE_HPP
#define HYPCERT_ENUMERATE_HPP

// Exhaustive census of rank 2 data (a1, a2; b1, 0) up to a conductor bound,
// with classification, adjoint trace field and triangle signature per row.
//
// Rows are canonical up to translating (a; b) by -b1, negating all
// parameters, and permuting the a entries.  All conductors N <= N_max are
// covered: a row belongs to the conductor of its parameters.

#include "hypcert/cyclo.hpp"
#include "hypcert/hyper.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace hypcert {

struct EnumerationRow {
    long conductor = 1;
    long a1 = 0, a2 = 0, b1 = 0;  // numerators over conductor, a1 <= a2
    Rank2Class classification = Rank2Class::reducible;
    std::optional<SubfieldDescriptor> adjoint_field;    // canonical; absent when reducible
    std::optional<SubfieldDescriptor> generator_field;  // field of the three generator traces
    TriangleSignature signature;

    HypergeometricDatum datum() const;
    friend bool operator==(const EnumerationRow&, const EnumerationRow&) = default;
};

/// Canonical representative of (a1, a2; b1, 0) at conductor n, entries reduced mod n.
std::array<long, 3> canonical_triple(long n, long a1, long a2, long b1);

/// Parallel integer kernel; workers <= 0 keeps the OpenMP default.
std::vector<EnumerationRow> enumerate_rank2(long n_max, int workers = 0);

/// Serial reference built from the exact library routines, for testing.
std::vector<EnumerationRow> enumerate_rank2_reference(long n_max);

struct EnumerationSummary {
    long n_max = 0;
    std::size_t rows = 0;
    std::map<Rank2Class, std::size_t> by_class;
    /// field -> count for quadratic adjoint fields, keyed by radicand
    std::map<long, std::size_t> quadratic_fields;
    std::map<long, std::size_t> by_degree;
    /// zariski-dense rows whose adjoint field exceeds the generator field
    std::size_t generator_discrepancies = 0;
    std::vector<EnumerationRow> discrepancy_examples;  // the first few
    /// rows whose adjoint field is Q(sqrt d) for odd squarefree d >= 7
    std::vector<EnumerationRow> forbidden;
    bool all_abelian = true;  // descriptors are subgroups of (Z/N)^x
};

EnumerationSummary summarize(const std::vector<EnumerationRow>& rows, long n_max);

}  // namespace hypcert

#endif
