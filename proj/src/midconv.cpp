#include "hypcert/midconv.hpp"

#include "hypcert/closure.hpp"
#include "hypcert/tracefield.hpp"

#include <numeric>
#include <stdexcept>

namespace hypcert {

namespace {

using CN = CyclotomicNumber;

// Basis of the column span of `cols` extended by unit vectors to all of F^dim;
// the first `span` columns of the result span the input.
CyclotomicMatrix extend_to_basis(const std::vector<Vector<CN>>& cols, std::size_t dim, std::size_t& span) {
    CyclotomicMatrix aug(dim, cols.size() + dim);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) aug(i, j) = cols[j][i];
    for (std::size_t i = 0; i < dim; ++i) aug(i, cols.size() + i) = CN(1);
    auto reduced = aug;
    const auto pivots = rref(reduced);
    span = 0;
    for (auto p : pivots)
        if (p < cols.size()) ++span;
    CyclotomicMatrix s(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) s(i, j) = aug(i, pivots[j]);
    return s;
}

void require_tuple(const MonodromyTuple& t, const char* what) {
    if (t.size() < 2) throw DomainError(std::string(what) + ": need at least two matrices");
    const std::size_t n = t[0].rows();
    for (const auto& g : t)
        if (g.rows() != n || g.cols() != n) throw DomainError(std::string(what) + ": matrices must be square of equal size");
    if (!(tuple_product(t) == CyclotomicMatrix::identity(n)))
        throw DomainError(std::string(what) + ": product of the tuple is not the identity");
}

}  // namespace

CyclotomicMatrix tuple_product(const MonodromyTuple& t) {
    if (t.empty()) throw DomainError("tuple_product: empty tuple");
    auto p = CyclotomicMatrix::identity(t[0].rows());
    for (const auto& g : t) p = p * g;
    return p;
}

long tuple_conductor(const MonodromyTuple& t) {
    long m = 1;
    for (const auto& g : t) m = lcm(m, conductor_of(g));
    return m;
}

long character_order(long m, long s, long t) {
    if (m < 1) throw DomainError("character order: m must be positive");
    return m / std::gcd(std::gcd(mod(s, m), mod(t, m)), m);
}

MonodromyTuple double_cover_tuple(long m, long s, long t) {
    if (m < 1) throw DomainError("double_cover_tuple: m must be positive");
    s = mod(s, m);
    t = mod(t, m);
    if (m > 1 && s == 0 && t == 0) throw DomainError("double_cover_tuple: (s, t) must be nonzero mod m");
    // x_i is the character on gamma_1 gamma_i; x_3 = x_2 x_4 forces the product relation
    const std::vector<CN> x{CN(1), CN::zeta(m, mod(-s, m)), CN::zeta(m, mod(-s - t, m)), CN::zeta(m, mod(-t, m))};
    MonodromyTuple out;
    for (const auto& xi : x) out.push_back(CyclotomicMatrix{{CN(0), CN(1) / xi}, {xi, CN(0)}});
    return out;
}

long middle_convolution_rank(const MonodromyTuple& t, const CyclotomicNumber& lambda) {
    require_tuple(t, "middle_convolution_rank");
    const std::size_t n = t[0].rows();
    const auto id = CyclotomicMatrix::identity(n);
    long d = 0;
    auto prod = id;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        d += static_cast<long>(rank(t[k] - id));
        prod = prod * t[k];
    }
    d += static_cast<long>(rank(lambda * prod - id));
    return d - static_cast<long>(n);
}

MonodromyTuple middle_convolution(const MonodromyTuple& t, const CyclotomicNumber& lambda) {
    require_tuple(t, "middle_convolution");
    if (is_zero(lambda) || lambda == CN(1)) throw DomainError("middle_convolution: lambda must differ from 0 and 1");
    if (!spans_full_matrix_algebra(t)) throw DomainError("middle_convolution: tuple is reducible");

    const long cond = lcm(tuple_conductor(t), lambda.conductor());
    const std::size_t n = t[0].rows(), p = t.size() - 1, dim = n * p;
    std::vector<CyclotomicMatrix> a;
    for (std::size_t k = 0; k < p; ++k) a.push_back(lift_matrix(t[k], cond));
    const auto lam = lambda.lifted(cond);
    const auto id_n = CyclotomicMatrix::identity(n);
    const auto id = CyclotomicMatrix::identity(dim);

    std::vector<CyclotomicMatrix> b;
    for (std::size_t k = 0; k < p; ++k) {
        auto bk = id;
        for (std::size_t j = 0; j < p; ++j) {
            CyclotomicMatrix blk = j < k ? lam * (a[j] - id_n) : j == k ? lam * a[j] : a[j] - id_n;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) bk(k * n + r, j * n + c) = blk(r, c);
        }
        b.push_back(std::move(bk));
    }

    // K = sum of ker(A_k - 1) placed in block k; L = common fixed space of the B_k
    std::vector<Vector<CN>> sub;
    for (std::size_t k = 0; k < p; ++k)
        for (auto& v : kernel_basis(a[k] - id_n)) {
            Vector<CN> w(dim, CN(0));
            for (std::size_t r = 0; r < n; ++r) w[k * n + r] = v[r];
            sub.push_back(std::move(w));
        }
    CyclotomicMatrix stacked(p * dim, dim);
    for (std::size_t k = 0; k < p; ++k) {
        const auto d = b[k] - id;
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) stacked(k * dim + r, c) = d(r, c);
    }
    for (auto& v : kernel_basis(stacked)) sub.push_back(std::move(v));

    std::size_t span = 0;
    const auto s = extend_to_basis(sub, dim, span);
    const auto sinv = inverse(s);
    const std::size_t q = dim - span;
    if (static_cast<long>(q) != middle_convolution_rank(t, lambda))
        throw std::logic_error("middle_convolution: quotient dimension disagrees with the rank formula");

    MonodromyTuple out;
    auto prod = CyclotomicMatrix::identity(q);
    for (const auto& bk : b) {
        const auto c = sinv * bk * s;
        CyclotomicMatrix blk(q, q);
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t cc = 0; cc < q; ++cc) blk(r, cc) = c(span + r, span + cc);
        prod = prod * blk;
        out.push_back(std::move(blk));
    }
    if (q > 0) out.push_back(inverse(prod));
    else out.push_back(prod);
    return out;
}

FamilyReport verify_family(long m, long s, long t) {
    FamilyReport rep;
    rep.m = m;
    rep.s = s;
    rep.t = t;
    rep.order = character_order(m, s, t);
    rep.input = double_cover_tuple(m, s, t);
    rep.expected_field = real_cyclotomic_field(rep.order);
    // the induced representation is irreducible iff the character is not its own inverse
    rep.irreducible = rep.order > 2;
    if (!rep.irreducible) return rep;

    rep.output = middle_convolution(rep.input, CN(-1));
    const long cond = lcm(tuple_conductor(rep.output), 2);
    int unipotent = 0, minus_unipotent = 0;
    const JordanEntry u{ResidueClass(), {2}}, mu{ResidueClass::from_fraction(1, 2), {2}};
    rep.det_ok = true;
    for (const auto& g : rep.output) {
        rep.jordan.push_back(jordan_shape(g, cond));
        const auto& js = rep.jordan.back();
        if (js.size() == 1 && js[0] == u) ++unipotent;
        if (js.size() == 1 && js[0] == mu) ++minus_unipotent;
        rep.determinants.push_back(determinant(g));
        if (!(rep.determinants.back() == CN(1))) rep.det_ok = false;
    }
    rep.jordan_ok = rep.output.size() == 4 && unipotent == 3 && minus_unipotent == 1;

    const auto f = trace_field_tuple(rep.output, 6);
    rep.trace_field = f.field;
    rep.field_sampled_stable = f.stable;
    rep.field_sample_length = f.length_used;
    rep.field_ok = same_field(rep.trace_field, rep.expected_field);
    return rep;
}

}  // namespace hypcert
