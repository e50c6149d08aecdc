#ifndef HYPCERT_MIDCONV_HPP
#define HYPCERT_MIDCONV_HPP

// Middle convolution of matrix tuples (Dettweiler-Reiter form) and the
// rank two family obtained from torsion characters on an elliptic double
// cover of the four-punctured line.

#include "hypcert/cyclo.hpp"
#include "hypcert/linalg.hpp"

#include <vector>

namespace hypcert {

/// Local monodromies M_1, ..., M_r with M_1 M_2 ... M_r = Id; the last entry
/// is the puncture at infinity.
using MonodromyTuple = std::vector<CyclotomicMatrix>;

CyclotomicMatrix tuple_product(const MonodromyTuple& t);
long tuple_conductor(const MonodromyTuple& t);

/// Induced representation of the character with values zeta_m^s, zeta_m^t on
/// the two homology generators of the double cover ramified at the four
/// punctures.  Every entry is antidiagonal with square Id.
MonodromyTuple double_cover_tuple(long m, long s, long t);

/// Order of the character used by double_cover_tuple(m, s, t).
long character_order(long m, long s, long t);

/// MC_lambda(T).  The first r - 1 entries are the finite punctures; the
/// output has the same number of entries, the last again at infinity.
/// Throws DomainError for lambda in {0, 1}, a reducible tuple or a tuple
/// whose product is not Id, and std::logic_error if the quotient dimension
/// disagrees with sum rk(A_k - 1) + rk(lambda A_1...A_{r-1} - 1) - n.
MonodromyTuple middle_convolution(const MonodromyTuple& t, const CyclotomicNumber& lambda);

/// Predicted output rank of middle_convolution.
long middle_convolution_rank(const MonodromyTuple& t, const CyclotomicNumber& lambda);

struct FamilyReport {
    long m = 1, s = 0, t = 0;
    long order = 1;           // order of the character
    bool irreducible = false; // input tuple; false means the checks were skipped
    MonodromyTuple input, output;
    std::vector<std::vector<JordanEntry>> jordan;   // per output matrix
    std::vector<CyclotomicNumber> determinants;
    SubfieldDescriptor trace_field, expected_field;
    bool field_sampled_stable = false;
    int field_sample_length = 0;

    bool jordan_ok = false;  // three unipotent J_2, one -J_2
    bool det_ok = false;     // every det is 1
    bool field_ok = false;   // trace field is Q(zeta + zeta^{-1}), zeta of the character order
    bool all() const { return irreducible && jordan_ok && det_ok && field_ok; }
};

FamilyReport verify_family(long m, long s, long t);

}  // namespace hypcert

#endif
