#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hypcert/enumerate.hpp"
#include "hypcert/tracefield.hpp"

#include <set>

using namespace hypcert;

TEST_CASE("parallel kernel agrees with the serial reference") {
    const auto ref = enumerate_rank2_reference(18);
    for (int w : {1, 2, 4}) {
        const auto fast = enumerate_rank2(18, w);
        REQUIRE(fast.size() == ref.size());
        std::size_t bad = 0;
        for (std::size_t i = 0; i < ref.size(); ++i) bad += !(ref[i] == fast[i]);
        CHECK(bad == 0);
    }
}

TEST_CASE("canonical representatives") {
    const auto rows = enumerate_rank2(20);
    std::set<std::array<long, 4>> seen;
    for (const auto& r : rows) {
        CHECK(canonical_triple(r.conductor, r.a1, r.a2, r.b1) == std::array<long, 3>{r.a1, r.a2, r.b1});
        CHECK(r.datum().conductor() == r.conductor);
        CHECK(seen.insert({r.conductor, r.a1, r.a2, r.b1}).second);
    }
    // every datum of conductor 12 has exactly one representative
    const long n = 12;
    std::set<std::array<long, 3>> reps;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                if (gcd(gcd(i, j), gcd(k, n)) != 1) continue;
                auto c = canonical_triple(n, i, j, k);
                CHECK(canonical_triple(n, c[0], c[1], c[2]) == c);
                CHECK(canonical_triple(n, -i, -j, -k) == c);
                CHECK(canonical_triple(n, i - k, j - k, -k) == c);
                CHECK(canonical_triple(n, j, i, k) == c);
                reps.insert(c);
            }
    std::size_t at12 = 0;
    for (const auto& r : rows) at12 += r.conductor == n;
    CHECK(reps.size() == at12);
}

TEST_CASE("small bounds") {
    const auto rows = enumerate_rank2(2);
    for (const auto& r : rows) {
        CHECK(r.conductor <= 2);
        if (r.adjoint_field) CHECK(r.adjoint_field->degree() == 1);
    }
    const auto s = summarize(rows, 2);
    CHECK(s.rows == rows.size());
}

TEST_CASE("conductor 10 contains the (5, 2, 2) row with field Q(sqrt 5)") {
    const auto rows = enumerate_rank2(10);
    bool found = false;
    for (const auto& r : rows)
        if (r.adjoint_field && r.signature == TriangleSignature{5, 2, 2} && r.classification == Rank2Class::finite) {
            if (quadratic_subfields(*r.adjoint_field) == std::vector<long>{5} && r.adjoint_field->degree() == 2) found = true;
        }
    CHECK(found);
}

TEST_CASE("Galois twists give conjugate rows") {
    const auto rows = enumerate_rank2(16);
    std::map<std::array<long, 4>, const EnumerationRow*> index;
    for (const auto& r : rows) index[{r.conductor, r.a1, r.a2, r.b1}] = &r;
    for (const auto& r : rows)
        for (long k : units_mod(r.conductor)) {
            auto c = canonical_triple(r.conductor, k * r.a1, k * r.a2, k * r.b1);
            auto it = index.find({r.conductor, c[0], c[1], c[2]});
            REQUIRE(it != index.end());
            const auto& t = *it->second;
            CHECK(t.classification == r.classification);
            CHECK(t.adjoint_field == r.adjoint_field);
        }
}

TEST_CASE("summary at conductor 60") {
    const auto rows = enumerate_rank2(60);
    const auto s = summarize(rows, 60);
    CHECK(s.all_abelian);
    CHECK(s.forbidden.empty());
    for (const auto& [d, count] : s.quadratic_fields) {
        INFO("Q(sqrt " << d << ") occurs " << count << " times");
        CHECK_FALSE((d >= 7 && d % 2 != 0));
    }
    CHECK(s.quadratic_fields.count(5) == 1);
    CHECK(s.by_class.count(Rank2Class::infinite_dihedral) == 0);
    // the generator field can be strictly smaller than the adjoint field
    CHECK(s.generator_discrepancies > 0);
    for (const auto& r : s.discrepancy_examples)
        CHECK(is_subfield(*r.generator_field, *r.adjoint_field));
}

TEST_CASE("rows against the word-trace oracle") {
    const auto rows = enumerate_rank2(9);
    int checked = 0;
    for (const auto& r : rows) {
        if (!r.adjoint_field || r.conductor < 5 || checked >= 25) continue;
        if ((r.a1 + r.a2 + r.b1) % 3 != 0) continue;
        auto t = monodromy_triple(r.datum());
        auto s = adjoint_trace_field_tuple(twist_to_unimodular({t.gInf, t.g1, t.g0}), 7);
        CHECK_MESSAGE(same_field(s.field, *r.adjoint_field), to_string(r.datum()));
        ++checked;
    }
    CHECK(checked == 25);
}
