#include "hypcert/enumerate.hpp"

#include "hypcert/tracefield.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hypcert {

namespace {

using Triple = std::array<long, 3>;

Triple sorted_triple(long n, long x, long y, long k) {
    x = mod(x, n);
    y = mod(y, n);
    if (y < x) std::swap(x, y);
    return {x, y, mod(k, n)};
}

long order_mod(long x, long n) { return n / gcd(mod(x, n), n); }

bool is_half(long x, long n) { return n % 2 == 0 && mod(x, n) == n / 2; }

using FieldCache = std::map<std::pair<long, std::vector<long>>, SubfieldDescriptor>;

const SubfieldDescriptor& canonical_cached(FieldCache& cache, long n, std::vector<long> stab) {
    auto key = std::make_pair(n, stab);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(std::move(key), canonical_subfield(make_subfield(n, std::move(stab)))).first;
    return it->second;
}

// Coordinates of sum_e zeta_n^{u e} in the power basis.
std::vector<long long> power_sum(const CyclotomicTables& t, const std::vector<long>& exps, long u) {
    std::vector<long long> v(static_cast<std::size_t>(t.phi), 0);
    for (long e : exps) {
        const auto& z = t.zeta_powers[static_cast<std::size_t>(mod(u * e, t.conductor))];
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += z[c];
    }
    return v;
}

EnumerationRow fast_row(long n, long i, long j, long k, const std::vector<long>& units, FieldCache& cache) {
    EnumerationRow row;
    row.conductor = n;
    row.a1 = i;
    row.a2 = j;
    row.b1 = k;
    const long lambda = i - j, mu = k, nu = k - i - j;
    row.signature = {order_mod(lambda, n), order_mod(mu, n), order_mod(nu, n)};
    if (i == 0 || j == 0 || i == k || j == k) {
        row.classification = Rank2Class::reducible;
        return row;
    }

    // interlacing for every Galois conjugate: exactly one a inside the arc (0, uk)
    bool finite = true;
    for (long u : units) {
        const long x = mod(u * i, n), y = mod(u * j, n), kk = mod(u * k, n);
        if ((0 < x && x < kk) == (0 < y && y < kk)) {
            finite = false;
            break;
        }
    }
    if (finite) row.classification = Rank2Class::finite;
    else if (is_half(lambda, n) + is_half(mu, n) + is_half(nu, n) >= 2) row.classification = Rank2Class::infinite_dihedral;
    else row.classification = Rank2Class::zariski_dense;

    auto fixes = [n](long x, long u) {
        const long y = mod(u * x, n), x0 = mod(x, n);
        return y == x0 || y == mod(-x, n);
    };
    std::vector<long> gen;
    for (long u : units)
        if (fixes(lambda, u) && fixes(mu, u) && fixes(nu, u)) gen.push_back(u);

    // (zeta^i + zeta^j)(1 + zeta^{-k})(1 + zeta^nu)
    std::vector<long> exps;
    for (long x : {i, j})
        for (long y : {0L, -k})
            for (long z : {0L, nu}) exps.push_back(x + y + z);
    const auto& tab = cyclotomic_tables(n);
    const auto p = power_sum(tab, exps, 1);
    std::vector<long> adj;
    for (long u : gen)
        if (u == 1 || power_sum(tab, exps, u) == p) adj.push_back(u);

    row.generator_field = canonical_cached(cache, n, gen);
    row.adjoint_field = adj.size() == gen.size() ? *row.generator_field : canonical_cached(cache, n, std::move(adj));
    return row;
}

template <class F>
void for_each_canonical(long n, long i, F&& f) {
    for (long j = i; j < n; ++j)
        for (long k = 0; k < n; ++k) {
            if (gcd(gcd(i, j), gcd(k, n)) != 1) continue;
            if (canonical_triple(n, i, j, k) != Triple{i, j, k}) continue;
            f(j, k);
        }
}

}  // namespace

HypergeometricDatum EnumerationRow::datum() const {
    return HypergeometricDatum({ResidueClass::from_fraction(a1, conductor), ResidueClass::from_fraction(a2, conductor)},
                               {ResidueClass::from_fraction(b1, conductor), ResidueClass()});
}

std::array<long, 3> canonical_triple(long n, long a1, long a2, long b1) {
    const std::array<Triple, 4> images{sorted_triple(n, a1, a2, b1), sorted_triple(n, a1 - b1, a2 - b1, -b1),
                                       sorted_triple(n, -a1, -a2, -b1), sorted_triple(n, b1 - a1, b1 - a2, b1)};
    return *std::min_element(images.begin(), images.end());
}

std::vector<EnumerationRow> enumerate_rank2(long n_max, int workers) {
    if (n_max < 1) throw DomainError("enumerate_rank2: conductor bound must be positive");
    std::vector<std::pair<long, long>> cells;
    for (long n = 1; n <= n_max; ++n)
        for (long i = 0; i < n; ++i) cells.emplace_back(n, i);
    for (long n = 1; n <= n_max; ++n) cyclotomic_tables(n);

    std::vector<std::vector<EnumerationRow>> out(cells.size());
#ifdef _OPENMP
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
    {
        FieldCache cache;
        std::vector<long> units;
        long units_for = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 4)
#endif
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto [n, i] = cells[c];
            if (units_for != n) {
                units = units_mod(n);
                units_for = n;
            }
            for_each_canonical(n, i, [&](long j, long k) { out[c].push_back(fast_row(n, i, j, k, units, cache)); });
        }
    }
    (void)workers;

    std::vector<EnumerationRow> rows;
    for (auto& v : out)
        for (auto& r : v) rows.push_back(std::move(r));
    return rows;
}

std::vector<EnumerationRow> enumerate_rank2_reference(long n_max) {
    if (n_max < 1) throw DomainError("enumerate_rank2: conductor bound must be positive");
    std::vector<EnumerationRow> rows;
    for (long n = 1; n <= n_max; ++n)
        for (long i = 0; i < n; ++i)
            for_each_canonical(n, i, [&](long j, long k) {
                EnumerationRow row;
                row.conductor = n;
                row.a1 = i;
                row.a2 = j;
                row.b1 = k;
                const auto h = row.datum();
                row.classification = classify_rank2(h);
                row.signature = triangle_signature(h);
                if (row.classification != Rank2Class::reducible) {
                    row.adjoint_field = canonical_subfield(adjoint_trace_field_rank2(h));
                    row.generator_field = canonical_subfield(generator_adjoint_trace_field(h));
                }
                rows.push_back(std::move(row));
            });
    return rows;
}

EnumerationSummary summarize(const std::vector<EnumerationRow>& rows, long n_max) {
    EnumerationSummary s;
    s.n_max = n_max;
    s.rows = rows.size();
    std::map<std::pair<long, std::vector<long>>, std::vector<long>> quad_cache;
    for (const auto& r : rows) {
        ++s.by_class[r.classification];
        if (!r.adjoint_field) continue;
        const auto& f = *r.adjoint_field;
        ++s.by_degree[f.degree()];
        // every descriptor is a subgroup of (Z/N)^x, hence an abelian field
        try {
            make_subfield(f.conductor, f.stabilizer);
        } catch (const DomainError&) {
            s.all_abelian = false;
        }
        if (r.classification == Rank2Class::zariski_dense && r.generator_field && !(*r.generator_field == f)) {
            if (s.discrepancy_examples.size() < 8) s.discrepancy_examples.push_back(r);
            ++s.generator_discrepancies;
        }
        if (f.degree() != 2) continue;
        auto key = std::make_pair(f.conductor, f.stabilizer);
        auto it = quad_cache.find(key);
        if (it == quad_cache.end()) it = quad_cache.emplace(key, quadratic_subfields(f)).first;
        if (it->second.size() != 1) continue;
        const long d = it->second[0];
        ++s.quadratic_fields[d];
        if (d >= 7 && d % 2 != 0) s.forbidden.push_back(r);
    }
    return s;
}

}  // namespace hypcert
