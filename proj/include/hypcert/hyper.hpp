#ifndef HYPCERT_HYPER_HPP
#define HYPCERT_HYPER_HPP

// Hypergeometric parameter data (a; b) modulo Z and their monodromy.

#include "hypcert/cyclo.hpp"
#include "hypcert/linalg.hpp"
#include "hypcert/ratcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypcert {

class HypergeometricDatum {
public:
    HypergeometricDatum() = default;
    HypergeometricDatum(std::vector<ResidueClass> a, std::vector<ResidueClass> b);
    static HypergeometricDatum from_rationals(const std::vector<Rational>& a, const std::vector<Rational>& b);

    /// Sorted ascending.
    const std::vector<ResidueClass>& a() const { return a_; }
    const std::vector<ResidueClass>& b() const { return b_; }
    std::size_t rank() const { return a_.size(); }
    /// lcm of all denominators (1 when every parameter is 0).
    long conductor() const { return conductor_; }

    /// (k a; k b); the Galois conjugate under zeta -> zeta^k.
    HypergeometricDatum scaled(long k) const;
    /// (a + c; b + c).
    HypergeometricDatum translated(const ResidueClass& c) const;

    friend bool operator==(const HypergeometricDatum&, const HypergeometricDatum&) = default;

private:
    std::vector<ResidueClass> a_, b_;
    long conductor_ = 1;
};

std::string to_string(const HypergeometricDatum& h);

/// No a_i is congruent to any b_j mod 1.
bool is_irreducible(const HypergeometricDatum& h);

/// Smallest d >= 2 dividing n with both multisets invariant under x -> x + 1/d.
std::optional<long> is_kummer_induced(const HypergeometricDatum& h);

/// prod (t - e(x_i)) over Q(zeta_N).
Poly<CyclotomicNumber> root_polynomial(const std::vector<ResidueClass>& xs, long conductor);

/// gInf g1 g0 = Id.
struct MonodromyTriple {
    CyclotomicMatrix g0, g1, gInf;
    long conductor = 1;
};

/// The identities the construction must satisfy, each checked exactly.
struct TripleChecks {
    bool product_identity = false;
    bool char_poly_inf = false;  // char_poly(gInf) = prod (t - alpha_i)
    bool char_poly_0 = false;    // char_poly(g0^{-1}) = prod (t - beta_j)
    bool pseudoreflection = false;  // rank(g1 - Id) = 1, or 0 when a = b
    bool det_g1 = false;         // det g1 = e(sum b - sum a)
    bool jordan_0 = false;       // one Jordan block per eigenvalue of g0
    bool jordan_inf = false;     // likewise for gInf
    bool all() const {
        return product_identity && char_poly_inf && char_poly_0 && pseudoreflection && det_g1 && jordan_0 && jordan_inf;
    }
};

TripleChecks check_triple(const HypergeometricDatum& h, const MonodromyTriple& t);

/// Companion-matrix realization; throws std::logic_error if check_triple fails.
MonodromyTriple monodromy_triple(const HypergeometricDatum& h);

/// Strict alternation of the a- and b-points on the circle.
bool interlaces(const HypergeometricDatum& h);
/// Interlacing for every Galois conjugate k h, gcd(k, N) = 1.
bool finite_by_interlacing(const HypergeometricDatum& h);

enum class Rank2Class { reducible, finite, infinite_dihedral, zariski_dense };
std::string to_string(Rank2Class c);

/// Exponents of lambda = alpha1/alpha2, mu = beta2/beta1 and nu = det g1 for
/// rank 2 data; with b = (0, b1) these are a1 - a2, b1 and b1 - a1 - a2.
struct LocalExponents {
    ResidueClass lambda, mu, nu;
};
LocalExponents local_exponents(const HypergeometricDatum& h);

Rank2Class classify_rank2(const HypergeometricDatum& h);

/// Multiplicative orders of lambda, mu, nu.
struct TriangleSignature {
    long l = 1, m = 1, r = 1;
    friend bool operator==(const TriangleSignature&, const TriangleSignature&) = default;
};
TriangleSignature triangle_signature(const HypergeometricDatum& h);
/// "(5, 2, 2)"
std::string to_string(const TriangleSignature& s);

}  // namespace hypcert

#endif
