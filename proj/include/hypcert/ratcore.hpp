#ifndef HYPCERT_RATCORE_HPP
#define HYPCERT_RATCORE_HPP

// Exact integers and rationals backed by GMP, plus the handful of
// elementary number theory helpers the rest of the library relies on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for violated preconditions on user-facing operations.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Parses "p/q", "p" or "-p/q". Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);
/// Parses a comma separated list of rationals; empty input yields {}.
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);

/// Residue of x in [0,1), read as the exponent of e^{2 pi i x}.
class ResidueClass {
public:
    ResidueClass() = default;
    explicit ResidueClass(const Rational& x);
    static ResidueClass from_fraction(long num, long den) { return ResidueClass(make_rational(num, den)); }

    const Rational& value() const { return value_; }
    /// Multiplicative order of e^{2 pi i x}, i.e. the reduced denominator.
    long order() const;

    ResidueClass operator+(const ResidueClass& o) const { return ResidueClass(value_ + o.value_); }
    ResidueClass operator-(const ResidueClass& o) const { return ResidueClass(value_ - o.value_); }
    ResidueClass operator-() const { return ResidueClass(-value_); }
    ResidueClass scaled(long k) const { return ResidueClass(value_ * k); }

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) { return a.value_ == b.value_; }
    friend bool operator<(const ResidueClass& a, const ResidueClass& b) { return a.value_ < b.value_; }

private:
    Rational value_{0};
};

std::string to_string(const ResidueClass& r);

long gcd(long a, long b);
long lcm(long a, long b);
long euler_phi(long n);
/// Units of Z/N in increasing order; the trivial group for N = 1 is written {1}.
std::vector<long> units_mod(long n);
long mod(long a, long n);

/// Prime factorization by trial division. Throws DomainError if a cofactor
/// larger than bound^2 survives and is not a perfect square of a prime.
struct PrimePower {
    Integer prime;
    unsigned exponent;
};
std::vector<PrimePower> factor_trial(const Integer& n, unsigned long bound = 1000000);

bool is_perfect_square(const Integer& n);
bool is_squarefree(const Integer& n, unsigned long bound = 1000000);

/// d squarefree with n = d m^2 and sign(d) = sign(n).
Integer squarefree_part(const Integer& n, unsigned long bound = 1000000);

/// Discriminant of Q(sqrt d): d if d = 1 mod 4, otherwise 4d.
Integer quadratic_discriminant(const Integer& d);

/// lcm(1, 2, ..., n).
Integer lcm_upto(unsigned long n);

/// Smallest x with x^k >= n, for n >= 0.
Integer iroot_ceil(const Integer& n, unsigned long k);

}  // namespace hypcert

#endif
