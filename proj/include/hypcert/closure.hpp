#ifndef HYPCERT_CLOSURE_HPP
#define HYPCERT_CLOSURE_HPP

// Brute-force group computations on explicit matrix tuples: exact closure
// with an element cap, the Burnside spanning test, and word enumeration.

#include "hypcert/linalg.hpp"

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

namespace hypcert {

struct ClosureResult {
    bool finite = false;    // closed before reaching the cap
    std::size_t size = 0;   // elements found (the group order when finite)
    bool used_fast_path = false;  // 64-bit Z[zeta_N] arithmetic sufficed
};

/// Closes {gens} under multiplication.  The generators must be invertible
/// and of finite order for finiteness to be detected.
ClosureResult group_closure(const std::vector<CyclotomicMatrix>& gens, std::size_t cap = 10000);

/// The algebra generated by the matrices is all of M_n (absolute irreducibility).
bool spans_full_matrix_algebra(const std::vector<CyclotomicMatrix>& gens);

/// All entries written at a common conductor m; every entry conductor must divide m.
CyclotomicMatrix lift_matrix(const CyclotomicMatrix& g, long m);

/// Distinct group elements given by words of length <= max_len in the
/// generators and their inverses (identity included).
std::vector<CyclotomicMatrix> words_up_to(const std::vector<CyclotomicMatrix>& gens, int max_len);

/// Words of length exactly 0..max_len, one entry per length, distinct across lengths.
std::vector<std::vector<CyclotomicMatrix>> word_layers(const std::vector<CyclotomicMatrix>& gens, int max_len);

/// Breadth-first enumeration of distinct group elements, one word length at a time.
class WordEnumerator {
public:
    explicit WordEnumerator(const std::vector<CyclotomicMatrix>& gens);
    /// Elements first reached at the next length (the identity at length 0).
    const std::vector<CyclotomicMatrix>& next_layer();
    int length() const { return length_; }
    long conductor() const { return conductor_; }

private:
    std::vector<CyclotomicMatrix> letters_, layer_;
    std::unordered_set<std::string> seen_;
    long conductor_ = 1;
    int length_ = -1;
};

}  // namespace hypcert

#endif
