#include "hypcert/hyper.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypcert {

namespace {

long conductor_of(const std::vector<ResidueClass>& a, const std::vector<ResidueClass>& b) {
    long n = 1;
    for (const auto& x : a) n = lcm(n, x.order());
    for (const auto& x : b) n = lcm(n, x.order());
    return n;
}

bool translation_invariant(const std::vector<ResidueClass>& xs, const ResidueClass& c) {
    std::vector<ResidueClass> moved;
    for (const auto& x : xs) moved.push_back(x + c);
    std::sort(moved.begin(), moved.end());
    return moved == xs;
}

}  // namespace

HypergeometricDatum::HypergeometricDatum(std::vector<ResidueClass> a, std::vector<ResidueClass> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty() || a_.size() != b_.size()) throw DomainError("hypergeometric datum needs |a| = |b| >= 1");
    std::sort(a_.begin(), a_.end());
    std::sort(b_.begin(), b_.end());
    conductor_ = conductor_of(a_, b_);
}

HypergeometricDatum HypergeometricDatum::from_rationals(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<ResidueClass> ra, rb;
    for (const auto& x : a) ra.emplace_back(x);
    for (const auto& x : b) rb.emplace_back(x);
    return {std::move(ra), std::move(rb)};
}

HypergeometricDatum HypergeometricDatum::scaled(long k) const {
    std::vector<ResidueClass> ra, rb;
    for (const auto& x : a_) ra.push_back(x.scaled(k));
    for (const auto& x : b_) rb.push_back(x.scaled(k));
    return {std::move(ra), std::move(rb)};
}

HypergeometricDatum HypergeometricDatum::translated(const ResidueClass& c) const {
    std::vector<ResidueClass> ra, rb;
    for (const auto& x : a_) ra.push_back(x + c);
    for (const auto& x : b_) rb.push_back(x + c);
    return {std::move(ra), std::move(rb)};
}

std::string to_string(const HypergeometricDatum& h) {
    auto list = [](const std::vector<ResidueClass>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + to_string(xs[i]);
        return s;
    };
    return "a=(" + list(h.a()) + ") b=(" + list(h.b()) + ")";
}

bool is_irreducible(const HypergeometricDatum& h) {
    for (const auto& x : h.a())
        for (const auto& y : h.b())
            if (x == y) return false;
    return true;
}

std::optional<long> is_kummer_induced(const HypergeometricDatum& h) {
    const long n = static_cast<long>(h.rank());
    for (long d = 2; d <= n; ++d) {
        if (n % d) continue;
        const auto c = ResidueClass::from_fraction(1, d);
        if (translation_invariant(h.a(), c) && translation_invariant(h.b(), c)) return d;
    }
    return std::nullopt;
}

Poly<CyclotomicNumber> root_polynomial(const std::vector<ResidueClass>& xs, long conductor) {
    auto p = Poly<CyclotomicNumber>::constant(CyclotomicNumber(1));
    for (const auto& x : xs) p = p * Poly<CyclotomicNumber>::linear_factor(CyclotomicNumber::root_of_unity(x, conductor));
    return p;
}

TripleChecks check_triple(const HypergeometricDatum& h, const MonodromyTriple& t) {
    using M = CyclotomicMatrix;
    const std::size_t n = h.rank();
    const auto id = M::identity(n);
    TripleChecks c;
    c.product_identity = t.gInf * t.g1 * t.g0 == id;
    c.char_poly_inf = char_poly(t.gInf) == root_polynomial(h.a(), t.conductor);
    c.char_poly_0 = char_poly(inverse(t.g0)) == root_polynomial(h.b(), t.conductor);
    // g1 = Id exactly when the two characteristic polynomials coincide
    c.pseudoreflection = rank(t.g1 - id) == (h.a() == h.b() ? 0u : 1u);
    ResidueClass gamma;
    for (const auto& x : h.b()) gamma = gamma + x;
    for (const auto& x : h.a()) gamma = gamma - x;
    c.det_g1 = determinant(t.g1) == CyclotomicNumber::root_of_unity(gamma, t.conductor);
    auto single_blocks = [&](const M& g) {
        for (const auto& e : jordan_shape(g, t.conductor))
            if (e.blocks.size() != 1) return false;
        return true;
    };
    c.jordan_0 = single_blocks(t.g0);
    c.jordan_inf = single_blocks(t.gInf);
    return c;
}

MonodromyTriple monodromy_triple(const HypergeometricDatum& h) {
    MonodromyTriple t;
    t.conductor = h.conductor();
    t.gInf = companion(root_polynomial(h.a(), t.conductor));
    t.g0 = inverse(companion(root_polynomial(h.b(), t.conductor)));
    t.g1 = inverse(t.gInf) * inverse(t.g0);
    if (!check_triple(h, t).all()) throw std::logic_error("monodromy_triple: postcondition violated for " + to_string(h));
    return t;
}

bool interlaces(const HypergeometricDatum& h) {
    std::vector<std::pair<ResidueClass, int>> pts;
    for (const auto& x : h.a()) pts.emplace_back(x, 0);
    for (const auto& x : h.b()) pts.emplace_back(x, 1);
    std::sort(pts.begin(), pts.end());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& next = pts[(i + 1) % pts.size()];
        if (pts[i].second == next.second || pts[i].first == next.first) return false;
    }
    return true;
}

bool finite_by_interlacing(const HypergeometricDatum& h) {
    if (!is_irreducible(h)) return false;
    for (long k : units_mod(h.conductor()))
        if (!interlaces(h.scaled(k))) return false;
    return true;
}

std::string to_string(Rank2Class c) {
    switch (c) {
        case Rank2Class::reducible: return "reducible";
        case Rank2Class::finite: return "finite";
        case Rank2Class::infinite_dihedral: return "infinite-dihedral";
        case Rank2Class::zariski_dense: return "zariski-SL2-up-to-center";
    }
    return "?";
}

// Differences of exponents are unchanged by translating (a; b), so no
// normalization of b is needed here.
LocalExponents local_exponents(const HypergeometricDatum& h) {
    if (h.rank() != 2) throw DomainError("local exponents need rank 2");
    const auto& a = h.a();
    const auto& b = h.b();
    return {a[0] - a[1], b[1] - b[0], b[0] + b[1] - a[0] - a[1]};
}

// Irreducible rank 2 monodromy is imprimitive exactly when two of the three
// projective local monodromies are involutions (lambda, mu or nu equal to -1);
// Kummer induced data are a special case.  With rational parameters both
// situations turn out to be finite, so the dihedral branch is a guard.
Rank2Class classify_rank2(const HypergeometricDatum& h) {
    if (h.rank() != 2) throw DomainError("classify_rank2: rank must be 2");
    if (!is_irreducible(h)) return Rank2Class::reducible;
    if (finite_by_interlacing(h)) return Rank2Class::finite;
    const auto e = local_exponents(h);
    const ResidueClass half = ResidueClass::from_fraction(1, 2);
    const int involutions = (e.lambda == half) + (e.mu == half) + (e.nu == half);
    if (involutions >= 2 || is_kummer_induced(h)) return Rank2Class::infinite_dihedral;
    return Rank2Class::zariski_dense;
}

TriangleSignature triangle_signature(const HypergeometricDatum& h) {
    if (h.rank() != 2) throw DomainError("triangle_signature: rank must be 2");
    if (!(h.b()[0] == ResidueClass())) throw DomainError("triangle_signature: 0 must be one of the b parameters");
    const auto e = local_exponents(h);
    return {e.lambda.order(), e.mu.order(), e.nu.order()};
}

std::string to_string(const TriangleSignature& s) {
    return "(" + std::to_string(s.l) + ", " + std::to_string(s.m) + ", " + std::to_string(s.r) + ")";
}

}  // namespace hypcert
