#ifndef HYPCERT_CYCLO_HPP
#define HYPCERT_CYCLO_HPP

// Exact arithmetic in Q(zeta_N).  Elements are stored as the reduced residue
// modulo the N-th cyclotomic polynomial in the power basis 1, zeta, ...,
// zeta^{phi(N)-1}.  Values of different conductors are lifted to the lcm
// before any arithmetic, so the rationals (conductor 1) mix freely.

#include "hypcert/ratcore.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypcert {

/// Per-conductor data: Phi_N and the reduced coordinates of zeta^e for 0 <= e < N.
struct CyclotomicTables {
    long conductor = 1;
    long phi = 1;
    std::vector<long long> cyclotomic_poly;  // low to high, monic, length phi+1
    std::vector<std::vector<long long>> zeta_powers;
};

/// Thread safe: concurrent readers, tables are built once per conductor.
const CyclotomicTables& cyclotomic_tables(long conductor);

class CyclotomicNumber {
public:
    CyclotomicNumber();
    CyclotomicNumber(const Rational& r);  // NOLINT: implicit, rationals embed everywhere
    CyclotomicNumber(long r) : CyclotomicNumber(Rational(r)) {}  // NOLINT
    CyclotomicNumber(long conductor, std::vector<Rational> coeffs);

    /// zeta_N^e.
    static CyclotomicNumber zeta(long conductor, long exponent);
    /// e^{2 pi i x} realized in Q(zeta_N); the denominator of x must divide N.
    static CyclotomicNumber root_of_unity(const ResidueClass& x, long conductor);
    static CyclotomicNumber root_of_unity(const ResidueClass& x) {
        return root_of_unity(x, x.order());
    }

    long conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// The same element written in Q(zeta_M); requires conductor() | M.
    CyclotomicNumber lifted(long m) const;

    bool is_zero() const;
    bool is_rational() const;
    /// Every coordinate integral, i.e. the element lies in Z[zeta_N].
    bool is_integral() const;
    Rational rational_value() const;  // requires is_rational()

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    CyclotomicNumber inverse() const;

    /// Image under zeta_N -> zeta_N^k; k must be a unit mod N.
    CyclotomicNumber galois(long k) const;

    /// Stable text key for hashing; two equal elements of equal conductor share a key.
    std::string key() const;

private:
    long conductor_ = 1;
    std::vector<Rational> coeffs_;
};

std::string to_string(const CyclotomicNumber& v);

inline bool is_zero(const CyclotomicNumber& v) { return v.is_zero(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// galois_apply(k, v); throws DomainError if gcd(k, N) != 1.
CyclotomicNumber galois_apply(long k, const CyclotomicNumber& v);

/// An element of Z[zeta_N] with 64-bit coordinates and overflow detection.
/// Used by the group-closure and word-trace kernels; arithmetic throws
/// std::overflow_error instead of wrapping.
class CyclotomicInteger {
public:
    CyclotomicInteger() = default;
    CyclotomicInteger(long conductor, long long value);
    static CyclotomicInteger zeta(long conductor, long exponent);
    static std::optional<CyclotomicInteger> from(const CyclotomicNumber& v, long conductor);

    long conductor() const { return conductor_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    CyclotomicInteger operator-() const;
    CyclotomicInteger& operator+=(const CyclotomicInteger& o);
    CyclotomicInteger& operator-=(const CyclotomicInteger& o);
    friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
    friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
    friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
    friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) = default;

    CyclotomicNumber to_number() const;

private:
    long conductor_ = 1;
    std::vector<long long> coeffs_{0};
};

inline bool is_zero(const CyclotomicInteger& v) { return v.is_zero(); }

/// A subfield of Q(zeta_N) given by its Galois stabilizer H <= (Z/N)^x.
struct SubfieldDescriptor {
    long conductor = 1;
    std::vector<long> stabilizer{1};

    long degree() const;
    friend bool operator==(const SubfieldDescriptor&, const SubfieldDescriptor&) = default;
};

/// Validates closure and sorts; throws DomainError if H is not a subgroup.
SubfieldDescriptor make_subfield(long conductor, std::vector<long> stabilizer);

/// Units mod N with N = 1 represented by the single unit 1.
std::vector<long> unit_group(long conductor);

/// H = { k : galois(k, t) = t for all t }.
SubfieldDescriptor fixed_field(std::span<const CyclotomicNumber> traces, long conductor);

/// The same field described inside Q(zeta_M) for N | M.
SubfieldDescriptor lift_subfield(const SubfieldDescriptor& s, long m);
/// Equivalent descriptor with the smallest possible conductor.
SubfieldDescriptor canonical_subfield(const SubfieldDescriptor& s);
bool same_field(const SubfieldDescriptor& a, const SubfieldDescriptor& b);
/// a is contained in b.
bool is_subfield(const SubfieldDescriptor& a, const SubfieldDescriptor& b);

SubfieldDescriptor rational_field();
SubfieldDescriptor full_cyclotomic_field(long conductor);
/// Q(zeta_N + zeta_N^{-1}).
SubfieldDescriptor real_cyclotomic_field(long conductor);

/// g with g^2 = d at conductor |disc(Q(sqrt d))|, built from prime Gauss sums.
CyclotomicNumber sqrt_as_cyclotomic(const Integer& d);

/// All squarefree d with Q(sqrt d) inside the described field, ascending.
std::vector<long> quadratic_subfields(const SubfieldDescriptor& s);

}  // namespace hypcert

template <>
struct std::hash<hypcert::CyclotomicInteger> {
    std::size_t operator()(const hypcert::CyclotomicInteger& v) const noexcept;
};

#endif
