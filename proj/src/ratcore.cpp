#include "hypcert/ratcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hypcert {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw DomainError("malformed integer '" + std::string(s) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw DomainError("malformed integer '" + std::string(s) + "'");
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    auto num = parse_integer(trim(text.substr(0, slash)));
    auto den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '-')
        throw DomainError("denominator must be positive in '" + std::string(text) + "'");
    auto den = parse_integer(den_text);
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    text = trim(text);
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

ResidueClass::ResidueClass(const Rational& x) : value_(x - Rational(hypcert::floor(x))) {}

long ResidueClass::order() const {
    if (!value_.get_den().fits_slong_p()) throw DomainError("residue denominator too large");
    return value_.get_den().get_si();
}

std::string to_string(const ResidueClass& r) { return to_string(r.value()); }

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return std::lcm(a, b); }

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> units_mod(long n) {
    if (n == 1) return {1};
    std::vector<long> out;
    for (long k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

std::vector<PrimePower> factor_trial(const Integer& n_in, unsigned long bound) {
    if (n_in == 0) throw DomainError("cannot factor zero");
    Integer n = abs(n_in);
    std::vector<PrimePower> out;
    for (unsigned long p = 2; p <= bound; p += (p == 2 ? 1 : 2)) {
        Integer pp(p);
        if (pp * pp > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e) out.push_back({pp, e});
    }
    if (n > 1) {
        Integer b(bound);
        if (n <= b * b) {
            out.push_back({n, 1});
        } else if (mpz_perfect_square_p(n.get_mpz_t())) {
            Integer r = sqrt(n);
            if (mpz_probab_prime_p(r.get_mpz_t(), 30) == 0)
                throw DomainError("trial division bound exceeded");
            out.push_back({r, 2});
        } else if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
            out.push_back({n, 1});
        } else {
            throw DomainError("trial division bound exceeded");
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.prime < y.prime; });
    return out;
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_squarefree(const Integer& n, unsigned long bound) {
    if (n == 0) return false;
    for (const auto& f : factor_trial(n, bound))
        if (f.exponent > 1) return false;
    return true;
}

Integer squarefree_part(const Integer& n, unsigned long bound) {
    if (n == 0) throw DomainError("squarefree_part of zero");
    Integer d = n < 0 ? Integer(-1) : Integer(1);
    for (const auto& f : factor_trial(n, bound))
        if (f.exponent % 2) d *= f.prime;
    return d;
}

Integer quadratic_discriminant(const Integer& d) {
    if (d == 0 || d == 1) throw DomainError("quadratic_discriminant: d must not be 0 or 1");
    if (!is_squarefree(d)) throw DomainError("quadratic_discriminant: d must be squarefree");
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), 4);
    return r == 1 ? d : Integer(4 * d);
}

Integer lcm_upto(unsigned long n) {
    Integer acc(1);
    for (unsigned long k = 2; k <= n; ++k) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), k);
    return acc;
}

Integer iroot_ceil(const Integer& n, unsigned long k) {
    if (n < 0) throw DomainError("iroot_ceil of negative number");
    if (k == 0) throw DomainError("iroot_ceil with k = 0");
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return exact ? r : Integer(r + 1);
}

}  // namespace hypcert
