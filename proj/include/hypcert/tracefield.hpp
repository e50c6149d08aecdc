#ifndef HYPCERT_TRACEFIELD_HPP
#define HYPCERT_TRACEFIELD_HPP

// Trace fields and adjoint trace fields, from eigenvalue data and from
// sampled word traces of explicit matrix tuples.

#include "hypcert/cyclo.hpp"
#include "hypcert/hyper.hpp"
#include "hypcert/linalg.hpp"

#include <vector>

namespace hypcert {

/// Fixed field at conductor N of {k : k a = a and k b = b as multisets}.
SubfieldDescriptor trace_field_rigid(const HypergeometricDatum& h);

/// The field generated by 2 + lambda + 1/lambda, 2 + mu + 1/mu, 2 + nu + 1/nu,
/// at conductor M = lcm of their orders.
SubfieldDescriptor generator_adjoint_trace_field(const HypergeometricDatum& h);

/// tr(gInf) tr(g0) tr(g1); its square is the product of the three generator
/// adjoint traces.
CyclotomicNumber adjoint_triple_product(const HypergeometricDatum& h);

/// The adjoint trace field of an irreducible rank 2 datum: the generator
/// field together with adjoint_triple_product.  Reported with the generator
/// descriptor whenever the two fields agree.
SubfieldDescriptor adjoint_trace_field_rank2(const HypergeometricDatum& h);

struct WordTraceSample {
    int max_length = 0;
    std::vector<CyclotomicNumber> traces;  // distinct
    long conductor = 1;
};

/// Traces of all words of length <= max_len in the generators and inverses.
WordTraceSample sample_word_traces(const std::vector<CyclotomicMatrix>& gens, int max_len);
SubfieldDescriptor word_trace_field(const std::vector<CyclotomicMatrix>& gens, int max_len);

struct SampledField {
    SubfieldDescriptor field;
    int length_used = 0;
    bool stable = false;  // unchanged over the last two length increments
};

/// Fixed field of {tr(w^2)}; lengths grow 2, 3, ... until the stabilizer is
/// unchanged for two increments, at most max_len.  Matrices must have det 1.
SampledField adjoint_trace_field_tuple(const std::vector<CyclotomicMatrix>& tuple, int max_len = 8);

/// Trace field of the tuple by the same stopping rule, with tr(w) in place of tr(w^2).
SampledField trace_field_tuple(const std::vector<CyclotomicMatrix>& tuple, int max_len = 8);

/// Scales each 2x2 matrix by a square root of its inverse determinant, fixing
/// one sign so that the ordered product is still the identity.
std::vector<CyclotomicMatrix> twist_to_unimodular(const std::vector<CyclotomicMatrix>& tuple);

/// Trace of X -> w X w^{-1} on gl_n, from the explicit n^2 x n^2 matrix.
CyclotomicNumber adjoint_trace_gl(const CyclotomicMatrix& w);

/// The exponent x in [0,1) with v = e(x); throws if v is not a root of unity of order dividing 2 conductor(v).
ResidueClass root_of_unity_exponent(const CyclotomicNumber& v);

}  // namespace hypcert

#endif
