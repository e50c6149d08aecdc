#include "hypcert/tracefield.hpp"

#include "hypcert/closure.hpp"

#include <unordered_set>

namespace hypcert {

namespace {

void require_irreducible_rank2(const HypergeometricDatum& h, const char* what) {
    if (h.rank() != 2) throw DomainError(std::string(what) + ": rank must be 2");
    if (!is_irreducible(h)) throw DomainError(std::string(what) + ": datum is reducible");
}

bool fixes_up_to_sign(const ResidueClass& x, long k) {
    const auto y = x.scaled(k);
    return y == x || y == -x;
}

CyclotomicNumber sum_of_roots(const std::vector<ResidueClass>& xs, long n, bool inverted) {
    CyclotomicNumber s;
    for (const auto& x : xs) s += CyclotomicNumber::root_of_unity(inverted ? -x : x, n);
    return s;
}

std::vector<long> stabilizer_of(const std::vector<CyclotomicNumber>& values, long conductor) {
    return fixed_field(values, conductor).stabilizer;
}

}  // namespace

SubfieldDescriptor trace_field_rigid(const HypergeometricDatum& h) {
    if (!is_irreducible(h)) throw DomainError("trace_field_rigid: datum is reducible");
    const long n = h.conductor();
    std::vector<long> stab;
    for (long k : units_mod(n))
        if (h.scaled(k) == h) stab.push_back(k);
    return make_subfield(n, std::move(stab));
}

SubfieldDescriptor generator_adjoint_trace_field(const HypergeometricDatum& h) {
    require_irreducible_rank2(h, "generator_adjoint_trace_field");
    const auto e = local_exponents(h);
    const long m = lcm(lcm(e.lambda.order(), e.mu.order()), e.nu.order());
    std::vector<long> stab;
    for (long k : units_mod(m))
        if (fixes_up_to_sign(e.lambda, k) && fixes_up_to_sign(e.mu, k) && fixes_up_to_sign(e.nu, k)) stab.push_back(k);
    return make_subfield(m, std::move(stab));
}

CyclotomicNumber adjoint_triple_product(const HypergeometricDatum& h) {
    require_irreducible_rank2(h, "adjoint_triple_product");
    const long n = h.conductor();
    const auto nu = local_exponents(h).nu;
    return sum_of_roots(h.a(), n, false) * sum_of_roots(h.b(), n, true) *
           (CyclotomicNumber(1) + CyclotomicNumber::root_of_unity(nu, n));
}

SubfieldDescriptor adjoint_trace_field_rank2(const HypergeometricDatum& h) {
    const auto gen = generator_adjoint_trace_field(h);
    const long n = h.conductor();
    const auto lifted = lift_subfield(gen, n);
    const auto p = adjoint_triple_product(h);
    std::vector<long> stab;
    for (long k : lifted.stabilizer)
        if (p.galois(k) == p) stab.push_back(k);
    if (stab.size() == lifted.stabilizer.size()) return gen;
    return canonical_subfield(make_subfield(n, std::move(stab)));
}

WordTraceSample sample_word_traces(const std::vector<CyclotomicMatrix>& gens, int max_len) {
    WordEnumerator en(gens);
    WordTraceSample s;
    s.max_length = max_len;
    s.conductor = en.conductor();
    std::unordered_set<std::string> keys;
    for (int len = 0; len <= max_len; ++len)
        for (const auto& w : en.next_layer()) {
            auto t = w.trace().lifted(s.conductor);
            if (keys.insert(t.key()).second) s.traces.push_back(std::move(t));
        }
    return s;
}

SubfieldDescriptor word_trace_field(const std::vector<CyclotomicMatrix>& gens, int max_len) {
    auto s = sample_word_traces(gens, max_len);
    return fixed_field(s.traces, s.conductor);
}

namespace {

template <class Value>
SampledField sampled_field(const std::vector<CyclotomicMatrix>& tuple, int max_len, Value value) {
    WordEnumerator en(tuple);
    const long m = en.conductor();
    std::vector<CyclotomicNumber> values;
    std::unordered_set<std::string> keys;
    std::vector<std::vector<long>> history;
    SampledField out;
    for (int len = 0; len <= max_len; ++len) {
        for (const auto& w : en.next_layer()) {
            auto t = value(w).lifted(m);
            if (keys.insert(t.key()).second) values.push_back(std::move(t));
        }
        if (len < 2) continue;
        history.push_back(stabilizer_of(values, m));
        out.length_used = len;
        const std::size_t h = history.size();
        if (h >= 3 && history[h - 1] == history[h - 2] && history[h - 2] == history[h - 3]) {
            out.stable = true;
            break;
        }
    }
    out.field = make_subfield(m, history.empty() ? stabilizer_of(values, m) : history.back());
    return out;
}

}  // namespace

SampledField adjoint_trace_field_tuple(const std::vector<CyclotomicMatrix>& tuple, int max_len) {
    for (const auto& g : tuple)
        if (!(determinant(g) == CyclotomicNumber(1))) throw DomainError("adjoint_trace_field_tuple: matrices must have determinant 1");
    return sampled_field(tuple, max_len, [](const CyclotomicMatrix& w) { return (w * w).trace(); });
}

SampledField trace_field_tuple(const std::vector<CyclotomicMatrix>& tuple, int max_len) {
    return sampled_field(tuple, max_len, [](const CyclotomicMatrix& w) { return w.trace(); });
}

ResidueClass root_of_unity_exponent(const CyclotomicNumber& v) {
    const long m = lcm(v.conductor(), 2);
    for (long j = 0; j < m; ++j)
        if (CyclotomicNumber::zeta(m, j) == v) return ResidueClass::from_fraction(j, m);
    throw DomainError("value is not a root of unity in its cyclotomic field");
}

std::vector<CyclotomicMatrix> twist_to_unimodular(const std::vector<CyclotomicMatrix>& tuple) {
    if (tuple.empty()) return {};
    std::vector<CyclotomicMatrix> out;
    for (const auto& g : tuple) {
        if (g.rows() != 2 || g.cols() != 2) throw DomainError("twist_to_unimodular: 2x2 matrices only");
        const auto x = root_of_unity_exponent(determinant(g));
        // c = e(-x/2), so det(c g) = c^2 det g = 1
        const ResidueClass half(Rational(-x.value() / 2));
        const auto c = CyclotomicNumber::root_of_unity(half);
        out.push_back(c * g);
    }
    auto prod = CyclotomicMatrix::identity(2);
    for (const auto& g : out) prod = prod * g;
    const auto id = CyclotomicMatrix::identity(2);
    if (prod == CyclotomicNumber(-1) * id) {
        out[0] = CyclotomicNumber(-1) * out[0];
    } else if (!(prod == id)) {
        throw DomainError("twist_to_unimodular: tuple product is not the identity");
    }
    return out;
}

CyclotomicNumber adjoint_trace_gl(const CyclotomicMatrix& w) {
    w.require_square("adjoint_trace_gl");
    const std::size_t n = w.rows();
    const auto winv = inverse(w);
    CyclotomicMatrix ad(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CyclotomicMatrix e(n, n);
            e(i, j) = CyclotomicNumber(1);
            const auto img = w * e * winv;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) ad(r * n + c, i * n + j) = img(r, c);
        }
    return ad.trace();
}

}  // namespace hypcert
