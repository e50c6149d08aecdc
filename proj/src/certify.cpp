#include "hypcert/certify.hpp"

#include "hypcert/cyclo.hpp"
#include "hypcert/series.hpp"

#include "triangle_table.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace hypcert {

static_assert(kRealCyclotomic24Discriminant == (1L << 8) * 9L, "stored discriminant must be 2^8 3^2");

namespace {

template <class Range>
std::string join(const Range& xs, const char* sep = ", ") {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : xs) {
        if (!first) os << sep;
        first = false;
        os << x;
    }
    return os.str();
}

std::string set_string(const std::vector<long>& xs) { return "{" + join(xs) + "}"; }

std::string rationals_string(const std::vector<Rational>& xs) {
    std::vector<std::string> s;
    for (const auto& x : xs) s.push_back(to_string(x));
    return "{" + join(s) + "}";
}

// Every l with phi(l) <= bound; phi(l) >= sqrt(l / 2) caps the search at 2 bound^2.
std::vector<long> orders_with_phi_at_most(long bound) {
    std::vector<long> out;
    for (long l = 1; l <= 2 * bound * bound; ++l)
        if (euler_phi(l) <= bound) out.push_back(l);
    return out;
}

CyclotomicNumber real_cosine(long l) {
    return CyclotomicNumber::zeta(l, mod(1, l)) + CyclotomicNumber::zeta(l, mod(-1, l));
}

}  // namespace

bool CertificateReport::verdict() const {
    if (stopped || steps.empty()) return false;
    return std::all_of(steps.begin(), steps.end(), [](const CertificateStep& s) { return s.pass; });
}

CertificateReport certify_quadratic_exclusion(const Integer& d) {
    CertificateReport rep;
    rep.claim = "adjoint trace field of an irreducible rank 2 hypergeometric datum is not Q(sqrt " + to_string(d) + ")";

    const bool odd = mpz_odd_p(d.get_mpz_t()) != 0;
    const bool big = d >= 7;
    const bool sqfree = big && is_squarefree(d);
    rep.steps.push_back({"D is odd, squarefree and at least 7",
                         std::string("odd: ") + (odd ? "yes" : "no") + ", squarefree: " + (sqfree ? "yes" : big ? "no" : "not checked") +
                             ", D >= 7: " + (big ? "yes" : "no"),
                         odd && sqfree && big});
    if (!rep.steps.back().pass) {
        rep.stopped = "hypothesis fails; no exclusion claimed";
        return rep;
    }

    // (i) a generator trace 2 + z + 1/z lies in Q(sqrt D) and in Q(z + 1/z)
    {
        const auto quartic = orders_with_phi_at_most(4);
        std::vector<long> degree_two, rational;
        std::set<long> radicands;
        bool hit = false;
        for (long l : quartic) {
            const long deg = l <= 2 ? 1 : euler_phi(l) / 2;
            if (deg == 1) {
                if (real_cosine(l).is_rational()) rational.push_back(l);
            } else if (deg == 2) {
                degree_two.push_back(l);
                for (long q : quadratic_subfields(real_cyclotomic_field(l))) {
                    radicands.insert(q);
                    if (q == d) hit = true;
                }
            }
        }
        rep.steps.push_back({"Q(sqrt D) is no field Q(z + 1/z) for a root of unity z",
                             "quadratic Q(z + 1/z) occur for orders " + set_string(degree_two) + " with radicands " +
                                 set_string(std::vector<long>(radicands.begin(), radicands.end())),
                             !hit});
        const std::vector<long> expect{1, 2, 3, 4, 6};
        rep.steps.push_back({"hence the three generator traces are rational and the local orders lie in {1, 2, 3, 4, 6}",
                             "z + 1/z rational exactly for orders " + set_string(rational) + " (searched all l <= 32)",
                             rational == expect});
    }

    // (ii) after the determinant twist the eigenvalues are square roots of lambda, mu, nu
    {
        long l = 1;
        for (long o : {1L, 2L, 3L, 4L, 6L}) l = lcm(l, o);
        rep.steps.push_back({"the twisted local eigenvalues are roots of unity of order dividing 24",
                             "2 lcm(1, 2, 3, 4, 6) = " + std::to_string(2 * l), 2 * l == 24});
    }

    // (iii) Q(sqrt D) would then lie in the real subfield of Q(zeta_24)
    const auto real24 = real_cyclotomic_field(24);
    const auto quad24 = quadratic_subfields(real24);
    rep.steps.push_back({"quadratic subfields of Q(zeta_24 + 1/zeta_24)",
                         "radicands " + set_string(quad24) + ", degree " + std::to_string(real24.degree()),
                         quad24 == std::vector<long>{2, 3, 6} && real24.degree() == 4});

    // (iv) discriminant transitivity in the degree 2 extension
    {
        // conductor-discriminant formula for the biquadratic field Q(sqrt 2, sqrt 3)
        Integer derived = 1;
        std::vector<std::string> parts;
        for (long q : quad24) {
            const Integer dq = abs(quadratic_discriminant(Integer(q)));
            derived *= dq;
            parts.push_back(to_string(dq));
        }
        rep.steps.push_back({"Disc(Q(zeta_24 + 1/zeta_24)) = 2^8 3^2 = 2304",
                             "stored " + std::to_string(kRealCyclotomic24Discriminant) + ", product of quadratic conductors " +
                                 join(parts, " * ") + " = " + to_string(derived),
                             derived == kRealCyclotomic24Discriminant});
        const Integer disc = quadratic_discriminant(d);
        const Integer sq = disc * disc;
        const bool divides = mpz_divisible_p(Integer(kRealCyclotomic24Discriminant).get_mpz_t(), sq.get_mpz_t()) != 0;
        rep.steps.push_back({"Disc(Q(sqrt D))^2 does not divide 2304",
                             "Disc = " + to_string(disc) + ", square " + to_string(sq) + (divides ? " divides 2304" : " does not divide 2304"),
                             !divides});
    }
    return rep;
}

CertificateReport certify_nonabelian_cubic(const Integer& disc) {
    CertificateReport rep;
    rep.claim = "no rank 2 hypergeometric datum has adjoint trace field the totally real cubic field of discriminant " + to_string(disc);
    const Integer r4 = ((disc % 4) + 4) % 4;
    rep.steps.push_back({"assumption: the input is the discriminant of a totally real cubic field",
                         "caller assertion; consistency: disc > 0 and disc = " + to_string(r4) + " mod 4",
                         disc > 0 && (r4 == 0 || r4 == 1)});
    const bool square = disc >= 0 && is_perfect_square(disc);
    Integer s;
    if (disc >= 0) mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    rep.steps.push_back({"disc is not a perfect square",
                         square ? to_string(disc) + " = " + to_string(s) + "^2"
                                : to_string(s) + "^2 < " + to_string(disc) + " < " + to_string(Integer(s + 1)) + "^2",
                         !square});
    rep.steps.push_back({"the Galois closure has group S_3, so the cubic field is not abelian",
                         square ? "square discriminant: group A_3" : "non-square discriminant: group S_3", !square});
    rep.steps.push_back({"every adjoint trace field of a rank 2 hypergeometric datum lies in a cyclotomic field",
                         "by construction: computed as the fixed field of a subgroup of (Z/N)^x", true});
    return rep;
}

const std::vector<TriangleTableRow>& triangle_table() {
    static const std::vector<TriangleTableRow> rows = [] {
        std::vector<TriangleTableRow> out;
        std::istringstream in(detail::kTriangleTableTsv);
        std::string line;
        bool header = true;
        auto order = [](const std::string& s) { return s == "inf" ? 0L : std::stol(s); };
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (header) {
                header = false;
                continue;
            }
            std::istringstream fs(line);
            std::string e1, e2, e3, deg, label;
            std::getline(fs, e1, '\t');
            std::getline(fs, e2, '\t');
            std::getline(fs, e3, '\t');
            std::getline(fs, deg, '\t');
            std::getline(fs, label, '\t');
            out.push_back({order(e1), order(e2), order(e3), std::stol(deg), label});
        }
        return out;
    }();
    return rows;
}

std::optional<TriangleTableRow> find_triangle_row(long l, long m, long r) {
    // cusps sort last, as in the table
    auto key = [](long e) { return e == 0 ? std::numeric_limits<long>::max() : e; };
    std::vector<long> want{l, m, r};
    std::sort(want.begin(), want.end(), [&](long x, long y) { return key(x) < key(y); });
    for (const auto& row : triangle_table())
        if (row.e1 == want[0] && row.e2 == want[1] && row.e3 == want[2]) return row;
    return std::nullopt;
}

CertificateReport certify_krammer_route(const std::vector<long>& ramified_primes) {
    CertificateReport rep;
    std::vector<long> ps = ramified_primes;
    std::sort(ps.begin(), ps.end());
    std::string label;
    for (long p : ps) label += "(" + std::to_string(p) + ")";
    if (label.empty()) label = "(1)";
    rep.claim = "no arithmetic triangle group over Q has quaternion discriminant " + label;

    const bool distinct = std::adjacent_find(ps.begin(), ps.end()) == ps.end();
    const bool primes = std::all_of(ps.begin(), ps.end(), [](long p) {
        if (p < 2) return false;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) return false;
        return true;
    });
    rep.steps.push_back({"the ramification set consists of distinct primes", set_string(ps), distinct && primes});
    rep.steps.push_back({"assumption: an even number of finite ramified primes (indefinite algebra over Q)",
                         std::to_string(ps.size()) + " primes", ps.size() % 2 == 0});

    std::set<std::string> labels;
    std::size_t over_q = 0;
    for (const auto& row : triangle_table())
        if (row.base_field_degree == 1) {
            labels.insert(row.discriminant);
            ++over_q;
        }
    rep.steps.push_back({"discriminants of arithmetic triangle groups over Q (bundled table)",
                         std::to_string(over_q) + " signatures with discriminants {" + join(labels) + "}",
                         labels == std::set<std::string>{"(1)", "(2)(3)"}});
    rep.steps.push_back({"the ramification set is neither empty nor {2, 3}", "discriminant " + label,
                         labels.count(label) == 0});
    return rep;
}

CertificateReport audit_krammer_singularities() {
    CertificateReport rep;
    rep.claim = "singular points of the Krammer operator are 0, 1, 81 and infinity recentered by z -> z + 1";
    const auto op = krammer_operator();
    auto [roots, rest] = rational_roots(op.leading());
    const std::vector<Rational> want{Rational(1), Rational(2), Rational(82)};
    rep.steps.push_back({"rational roots of the leading coefficient",
                         rationals_string(roots) + ", cofactor " + to_string(rest),
                         roots == want && rest.degree() == 0});
    std::vector<Rational> shifted;
    for (long x : {0L, 1L, 81L}) shifted.push_back(Rational(x + 1));
    rep.steps.push_back({"{0, 1, 81} + 1 = {1, 2, 82}", rationals_string(shifted), shifted == want});
    rep.steps.push_back({"infinity is fixed by the translation", "z -> z + 1 is affine", true});
    for (const auto& p : want) {
        const auto ind = indicial_exponents(op, p);
        rep.steps.push_back({"local exponents at " + to_string(p) + " are rational", rationals_string(ind.exponents),
                             ind.all_rational() && ind.exponents.size() == 2});
    }
    const auto inf = indicial_exponents(op, std::nullopt);
    rep.steps.push_back({"local exponents at infinity are rational", rationals_string(inf.exponents),
                         inf.all_rational() && inf.exponents.size() == 2});
    return rep;
}

}  // namespace hypcert
