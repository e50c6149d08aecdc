#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypcert/closure.hpp"
#include "hypcert/hyper.hpp"
#include "hypcert/midconv.hpp"

#include <numeric>
#include <random>

using namespace hypcert;
using CN = CyclotomicNumber;

namespace {

CyclotomicMatrix scalar(const CN& x) { return CyclotomicMatrix{{x}}; }

// Rank one tuple of roots of unity zeta_n^{e_1}, ..., closed by the inverse product.
MonodromyTuple rank_one(long n, const std::vector<long>& e) {
    MonodromyTuple t;
    long sum = 0;
    for (long x : e) {
        t.push_back(scalar(CN::zeta(n, mod(x, n))));
        sum += x;
    }
    t.push_back(scalar(CN::zeta(n, mod(-sum, n))));
    return t;
}

// Eigenvalues of every entry avoid +1 and -1.
bool avoids_signs(const MonodromyTuple& t) {
    const std::size_t n = t[0].rows();
    const auto id = CyclotomicMatrix::identity(n);
    for (const auto& g : t)
        if (rank(g - id) < n || rank(g + id) < n) return false;
    return true;
}

// Traces of positive words of length <= 3 in the finite entries.
std::vector<CN> word_traces(const MonodromyTuple& t) {
    std::vector<CN> out;
    const std::size_t p = t.size() - 1;
    std::vector<CyclotomicMatrix> layer{CyclotomicMatrix::identity(t[0].rows())};
    for (int len = 1; len <= 3; ++len) {
        std::vector<CyclotomicMatrix> next;
        for (const auto& w : layer)
            for (std::size_t k = 0; k < p; ++k) {
                next.push_back(w * t[k]);
                out.push_back(next.back().trace());
            }
        layer = std::move(next);
    }
    return out;
}

void check_tuple_invariants(const MonodromyTuple& out, std::size_t expected_rank) {
    REQUIRE(!out.empty());
    CHECK(out[0].rows() == expected_rank);
    CHECK(tuple_product(out) == CyclotomicMatrix::identity(expected_rank));
    for (const auto& g : out) CHECK_FALSE(is_zero(determinant(g)));
}

}  // namespace

TEST_CASE("double_cover_tuple shape") {
    for (long m = 1; m <= 9; ++m)
        for (long s = 0; s < m; ++s)
            for (long t = 0; t < m; ++t) {
                if (m > 1 && s == 0 && t == 0) continue;
                auto tup = double_cover_tuple(m, s, t);
                REQUIRE(tup.size() == 4);
                CHECK(tuple_product(tup) == CyclotomicMatrix::identity(2));
                for (const auto& g : tup) {
                    CHECK(determinant(g) == CN(-1));
                    CHECK(is_zero(g.trace()));
                    CHECK(g * g == CyclotomicMatrix::identity(2));
                    CHECK(is_zero(g(0, 0)));
                    CHECK(is_zero(g(1, 1)));
                }
            }
}

TEST_CASE("double_cover_tuple small cases") {
    auto t1 = double_cover_tuple(1, 0, 0);
    CyclotomicMatrix swap{{CN(0), CN(1)}, {CN(1), CN(0)}};
    for (const auto& g : t1) CHECK(g == swap);
    auto c1 = group_closure(t1);
    CHECK(c1.finite);
    CHECK(c1.size <= 4);

    auto t2 = double_cover_tuple(2, 1, 0);
    CHECK(tuple_conductor(t2) <= 2);
    CHECK(group_closure(t2).finite);

    CHECK_THROWS_AS(double_cover_tuple(0, 1, 1), DomainError);
    CHECK_THROWS_AS(double_cover_tuple(5, 0, 5), DomainError);
    CHECK(character_order(8, 2, 4) == 4);
    CHECK(character_order(7, 1, 2) == 7);
}

TEST_CASE("middle convolution examples") {
    auto out = middle_convolution(double_cover_tuple(7, 1, 2), CN(-1));
    check_tuple_invariants(out, 2);
    CHECK(out.size() == 4);

    // classical hypergeometric case: rank 1 + 1 + 1 - 1 = 2
    auto lam = CN::zeta(5, 1);
    auto r1 = rank_one(12, {1, 5});
    CHECK(middle_convolution_rank(r1, lam) == 2);
    auto h = middle_convolution(r1, lam);
    check_tuple_invariants(h, 2);
    // at a finite puncture with eigenvalue alpha the output has eigenvalues lambda alpha and 1
    for (std::size_t k = 0; k < 2; ++k) {
        const auto alpha = r1[k](0, 0);
        Poly<CN> expect({lam * alpha, -(lam * alpha + CN(1)), CN(1)});
        CHECK(char_poly(h[k]) == expect);
    }
}

TEST_CASE("middle convolution rejects bad input") {
    auto t = double_cover_tuple(5, 1, 1);
    CHECK_THROWS_AS(middle_convolution(t, CN(1)), DomainError);
    CHECK_THROWS_AS(middle_convolution(t, CN(0)), DomainError);
    // order 2 character: the induced tuple is reducible
    CHECK_THROWS_AS(middle_convolution(double_cover_tuple(2, 1, 0), CN(-1)), DomainError);
    auto broken = t;
    broken[0] = broken[1];
    CHECK_THROWS_AS(middle_convolution(broken, CN(-1)), DomainError);
}

TEST_CASE("dimension formula and product relation on random tuples") {
    std::mt19937_64 rng(7);
    int done = 0;
    while (done < 40) {
        std::uniform_int_distribution<long> cond(3, 12), len(2, 3);
        const long n = cond(rng);
        std::uniform_int_distribution<long> ex(0, n - 1);
        std::vector<long> e(static_cast<std::size_t>(len(rng)));
        for (auto& x : e) x = ex(rng);
        auto t = rank_one(n, e);
        const auto lam = CN::zeta(n, ex(rng));
        if (lam == CN(1)) continue;
        const long d = middle_convolution_rank(t, lam);
        if (d <= 0) continue;
        auto out = middle_convolution(t, lam);
        check_tuple_invariants(out, static_cast<std::size_t>(d));
        ++done;
    }
    // rank two hypergeometric triples (gInf, g1, g0)
    std::uniform_int_distribution<long> cond(3, 10);
    for (int trial = 0; trial < 15;) {
        const long n = cond(rng);
        std::uniform_int_distribution<long> num(0, n - 1);
        HypergeometricDatum h({ResidueClass::from_fraction(num(rng), n), ResidueClass::from_fraction(num(rng), n)},
                              {ResidueClass::from_fraction(num(rng), n), ResidueClass()});
        if (!is_irreducible(h)) continue;
        auto m = monodromy_triple(h);
        MonodromyTuple t{m.gInf, m.g1, m.g0};
        const long d = middle_convolution_rank(t, CN(-1));
        if (d <= 0) continue;
        check_tuple_invariants(middle_convolution(t, CN(-1)), static_cast<std::size_t>(d));
        ++trial;
    }
}

TEST_CASE("MC_{-1} is an involution") {
    std::mt19937_64 rng(13);
    int rank1 = 0, rank2 = 0;
    while (rank1 < 10) {
        std::uniform_int_distribution<long> cond(5, 12);
        const long n = cond(rng);
        std::uniform_int_distribution<long> ex(0, n - 1);
        auto t = rank_one(lcm(n, 2), {ex(rng), ex(rng)});
        if (!avoids_signs(t)) continue;
        auto once = middle_convolution(t, CN(-1));
        if (!spans_full_matrix_algebra(once)) continue;
        auto twice = middle_convolution(once, CN(-1));
        REQUIRE(twice[0].rows() == 1);
        for (std::size_t k = 0; k < t.size(); ++k) CHECK(twice[k] == t[k]);
        ++rank1;
    }
    while (rank2 < 10) {
        std::uniform_int_distribution<long> cond(3, 10);
        const long n = cond(rng);
        std::uniform_int_distribution<long> num(0, n - 1);
        // (gInf, g0^2, rest): unlike g1 the third entry is no pseudoreflection
        auto rc = [&] { return ResidueClass::from_fraction(num(rng), n); };
        MonodromyTuple t;
        {
            HypergeometricDatum h({rc(), rc()}, {rc(), rc()});
            if (!is_irreducible(h)) continue;
            auto m = monodromy_triple(h);
            const auto g = m.g0 * m.g0;
            t = {m.gInf, g, inverse(m.gInf * g)};
        }
        if (!avoids_signs(t)) continue;
        auto once = middle_convolution(t, CN(-1));
        if (!spans_full_matrix_algebra(once)) continue;
        auto twice = middle_convolution(once, CN(-1));
        REQUIRE(twice[0].rows() == 2);
        for (std::size_t k = 0; k < t.size(); ++k) CHECK(char_poly(twice[k]) == char_poly(t[k]));
        // irreducible tuples with equal word traces are conjugate
        auto a = word_traces(t), b = word_traces(twice);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        ++rank2;
    }
}

TEST_CASE("verify_family examples") {
    auto r5 = verify_family(5, 1, 1);
    CHECK(r5.all());
    CHECK(r5.trace_field.degree() == 2);
    CHECK(quadratic_subfields(r5.trace_field) == std::vector<long>{5});

    auto r7 = verify_family(7, 1, 2);
    CHECK(r7.all());
    CHECK(r7.trace_field.degree() == 3);
    CHECK(r7.field_sampled_stable);

    auto r1 = verify_family(1, 0, 0);
    CHECK_FALSE(r1.irreducible);
    CHECK_FALSE(r1.all());
    CHECK(r1.output.empty());
}

TEST_CASE("verify_family for m = 5..8 over all primitive characters") {
    for (long m = 5; m <= 8; ++m)
        for (long s = 0; s < m; ++s)
            for (long t = 0; t < m; ++t) {
                if (std::gcd(std::gcd(s, t), m) != 1) continue;
                auto r = verify_family(m, s, t);
                CHECK_MESSAGE(r.all(), "m=" << m << " s=" << s << " t=" << t);
                CHECK(r.order == m);
                CHECK(r.trace_field.degree() == static_cast<long>(unit_group(m).size() / 2));
                // unipotent up to sign at every puncture
                for (const auto& g : r.output) {
                    auto id = CyclotomicMatrix::identity(2);
                    auto u = g - id, v = g + id;
                    CHECK((u * u == CyclotomicMatrix(2, 2) || v * v == CyclotomicMatrix(2, 2)));
                    CHECK_FALSE(g == id);
                    CHECK_FALSE(g == CN(-1) * id);
                }
            }
}

TEST_CASE("verify_family with an imprimitive character uses the true order") {
    auto r = verify_family(8, 2, 0);
    CHECK(r.order == 4);
    CHECK(r.all());
    CHECK(r.trace_field.degree() == 1);
    CHECK_FALSE(verify_family(6, 3, 0).irreducible);
}
