#include "hypcert/series.hpp"

#include <algorithm>
#include <map>

namespace hypcert {

namespace {

// n choose k as a rational, small arguments only
Rational binomial(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

// (x + c)(x + c - 1)...(x + c - i + 1) as a polynomial in x
RationalPoly falling(long i, const Rational& c) {
    RationalPoly out = RationalPoly::constant(Rational(1));
    for (long t = 0; t < i; ++t) out = out * RationalPoly({Rational(c - t), Rational(1)});
    return out;
}

RationalPoly z_poly() { return RationalPoly({Rational(0), Rational(1)}); }

}  // namespace

DifferentialOperator::DifferentialOperator(std::vector<RationalPoly> coeffs) : p_(std::move(coeffs)) { trim(); }

void DifferentialOperator::trim() {
    while (!p_.empty() && p_.back().is_zero()) p_.pop_back();
}

DifferentialOperator DifferentialOperator::multiplication(const RationalPoly& p) {
    return DifferentialOperator(std::vector<RationalPoly>{p});
}

DifferentialOperator DifferentialOperator::derivation() {
    return DifferentialOperator({RationalPoly(), RationalPoly::constant(Rational(1))});
}

DifferentialOperator DifferentialOperator::theta() { return DifferentialOperator({RationalPoly(), z_poly()}); }

const RationalPoly& DifferentialOperator::leading() const {
    if (p_.empty()) throw DomainError("zero operator has no leading coefficient");
    return p_.back();
}

DifferentialOperator DifferentialOperator::recentered(const Rational& p) const {
    std::vector<RationalPoly> out;
    out.reserve(p_.size());
    for (const auto& c : p_) out.push_back(c.shifted(p));
    return DifferentialOperator(std::move(out));
}

DifferentialOperator DifferentialOperator::divided_by_z() const {
    std::vector<RationalPoly> out;
    for (const auto& c : p_) {
        if (!hypcert::is_zero(c.coeff(0))) throw DomainError("operator is not divisible by z on the left");
        std::vector<Rational> shifted(c.coeffs().begin() + (c.is_zero() ? 0 : 1), c.coeffs().end());
        out.emplace_back(std::move(shifted));
    }
    return DifferentialOperator(std::move(out));
}

DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
    std::vector<RationalPoly> r(std::max(a.p_.size(), b.p_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return DifferentialOperator(std::move(r));
}

DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b) {
    std::vector<RationalPoly> r(std::max(a.p_.size(), b.p_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return DifferentialOperator(std::move(r));
}

// d^i q = sum_l C(i,l) q^{(l)} d^{i-l}
DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<RationalPoly> r(a.p_.size() + b.p_.size() - 1);
    for (std::size_t j = 0; j < b.p_.size(); ++j) {
        RationalPoly qd = b.p_[j];
        for (std::size_t l = 0; !qd.is_zero(); ++l) {
            for (std::size_t i = l; i < a.p_.size(); ++i)
                r[i - l + j] += binomial(static_cast<long>(i), static_cast<long>(l)) * (a.p_[i] * qd);
            qd = qd.derivative();
        }
    }
    return DifferentialOperator(std::move(r));
}

DifferentialOperator operator*(const Rational& s, const DifferentialOperator& a) {
    std::vector<RationalPoly> r;
    for (const auto& c : a.p_) r.push_back(s * c);
    return DifferentialOperator(std::move(r));
}

std::string to_string(const DifferentialOperator& op) {
    if (op.is_zero()) return "0";
    std::string s;
    for (long i = op.order(); i >= 0; --i) {
        const auto& c = op.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "[" + to_string(c, "z") + "]";
        if (i >= 1) s += "*D";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

DifferentialOperator hyp_operator(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) throw DomainError("hyp_operator: parameter lists must be nonempty");
    if (a.size() != b.size()) throw DomainError("hyp_operator: a and b must have the same length");
    const auto th = DifferentialOperator::theta();
    auto shift = [](const Rational& c) { return DifferentialOperator::multiplication(RationalPoly::constant(c)); };
    auto left = shift(Rational(1));
    for (const auto& bi : b) left = left * (th + shift(bi - 1));
    auto right = DifferentialOperator::multiplication(z_poly());
    for (const auto& aj : a) right = right * (th + shift(aj));
    return left - right;
}

DifferentialOperator krammer_operator() {
    RationalPoly p = RationalPoly::linear_factor(Rational(1)) * RationalPoly::linear_factor(Rational(2)) *
                     RationalPoly::linear_factor(Rational(82));
    RationalPoly half_dp = make_rational(1, 2) * p.derivative();
    RationalPoly c0({make_rational(-10, 18), make_rational(1, 18)});
    return DifferentialOperator({c0, half_dp, p});
}

RationalPoly RecurrenceScheme::at(long j) const {
    if (j < min_shift || j > max_shift()) return {};
    return q[static_cast<std::size_t>(j - min_shift)];
}

// Coefficient of z^m in L(sum a_n z^n): with L = sum c_{ik} z^k d^i and j = i - k,
// it is sum_j [sum_{i-k=j} c_{ik} (m+j)(m+j-1)...(m+j-i+1)] a_{m+j}.
RecurrenceScheme operator_to_recurrence(const DifferentialOperator& op) {
    if (op.is_zero()) return {};
    std::map<long, RationalPoly> by_shift;
    for (long i = 0; i <= op.order(); ++i) {
        const auto& p = op.coeffs()[static_cast<std::size_t>(i)];
        for (long k = 0; k <= p.degree(); ++k) {
            const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
            if (is_zero(c)) continue;
            const long j = i - k;
            by_shift[j] += c * falling(i, Rational(j));
        }
    }
    RecurrenceScheme rs;
    std::erase_if(by_shift, [](const auto& kv) { return kv.second.is_zero(); });
    if (by_shift.empty()) return rs;
    rs.min_shift = by_shift.begin()->first;
    rs.q.assign(static_cast<std::size_t>(by_shift.rbegin()->first - rs.min_shift + 1), RationalPoly());
    for (auto& [j, p] : by_shift) rs.q[static_cast<std::size_t>(j - rs.min_shift)] = std::move(p);
    return rs;
}

SeriesSolution solve_at_ordinary_point(const DifferentialOperator& op, const std::vector<Rational>& initial, long terms) {
    if (op.is_zero()) throw DomainError("solve: zero operator");
    if (terms < 0) throw DomainError("solve: negative truncation order");
    const long r = op.order();
    if (static_cast<long>(initial.size()) != r)
        throw DomainError("solve: expected " + std::to_string(r) + " initial values, got " +
                          std::to_string(initial.size()));
    const auto rs = operator_to_recurrence(op);
    const long s = rs.max_shift();
    const long jmin = rs.min_shift;
    std::vector<Rational> a(initial.begin(), initial.end());
    a.resize(static_cast<std::size_t>(std::max<long>(terms + 1, r)), Rational(0));

    for (long m = 0; m + s <= terms; ++m) {
        Rational acc(0);
        for (long j = jmin; j < s; ++j) {
            const long idx = m + j;
            if (idx < 0) continue;
            const auto& qj = rs.q[static_cast<std::size_t>(j - jmin)];
            if (qj.is_zero()) continue;
            acc += qj(Rational(m)) * a[static_cast<std::size_t>(idx)];
        }
        const long target = m + s;
        if (target < 0) continue;
        const Rational lead = rs.q.back()(Rational(m));
        if (target < r) {
            if (!is_zero(Rational(acc + lead * a[static_cast<std::size_t>(target)])))
                throw DomainError("solve: initial values violate the relation at m = " + std::to_string(m));
            continue;
        }
        if (is_zero(lead))
            throw SingularRecurrence(m, "solve: leading recurrence coefficient vanishes at m = " + std::to_string(m));
        a[static_cast<std::size_t>(target)] = -acc / lead;
    }
    a.resize(static_cast<std::size_t>(terms + 1));
    return {std::move(a)};
}

std::vector<Rational> apply_truncated(const DifferentialOperator& op, const SeriesSolution& f) {
    const auto rs = operator_to_recurrence(op);
    std::vector<Rational> out;
    if (rs.q.empty()) return out;
    const long t = f.truncation();
    for (long m = 0; m + rs.max_shift() <= t; ++m) {
        Rational acc(0);
        for (long j = rs.min_shift; j <= rs.max_shift(); ++j) {
            if (m + j < 0) continue;
            const auto& qj = rs.q[static_cast<std::size_t>(j - rs.min_shift)];
            if (!qj.is_zero()) acc += qj(Rational(m)) * f.coeffs[static_cast<std::size_t>(m + j)];
        }
        out.push_back(acc);
    }
    return out;
}

SeriesSolution pochhammer_series(const std::vector<Rational>& a, const std::vector<Rational>& b, long terms) {
    if (terms < 0) throw DomainError("pochhammer_series: negative truncation order");
    for (const auto& bj : b)
        if (is_integer(bj) && bj <= 0) throw DomainError("pochhammer_series: b_j = " + to_string(bj) + " is a nonpositive integer");
    std::vector<Rational> c(static_cast<std::size_t>(terms + 1));
    c[0] = 1;
    for (long n = 0; n < terms; ++n) {
        Rational num(1), den(n + 1);
        for (const auto& ai : a) num *= ai + n;
        for (const auto& bj : b) den *= bj + n;
        c[static_cast<std::size_t>(n + 1)] = c[static_cast<std::size_t>(n)] * num / den;
    }
    return {std::move(c)};
}

SeriesSolution hadamard(const SeriesSolution& f, const SeriesSolution& g) {
    if (f.coeffs.size() != g.coeffs.size()) throw DomainError("hadamard: truncation orders differ");
    SeriesSolution h;
    h.coeffs.reserve(f.coeffs.size());
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) h.coeffs.push_back(f.coeffs[i] * g.coeffs[i]);
    return h;
}

Rational root_ceiling_6(const Integer& x, unsigned long n) {
    const Integer r0 = iroot_ceil(x, n);
    const std::size_t digits = r0.get_str().size();
    if (digits >= 6) return Rational(r0);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 6 - digits);
    Integer scaled_x;
    mpz_pow_ui(scaled_x.get_mpz_t(), scale.get_mpz_t(), n);
    scaled_x *= x;
    return make_rational(iroot_ceil(scaled_x, n), scale);
}

DenominatorAudit denominator_audit(const SeriesSolution& f, long from, long to) {
    if (from < 1 || to < from) throw DomainError("denominator_audit: empty window");
    if (to > f.truncation()) throw DomainError("denominator_audit: window exceeds truncation order");
    DenominatorAudit au;
    au.window_from = from;
    au.window_to = to;
    au.d.reserve(static_cast<std::size_t>(to + 1));
    Integer acc(1);
    for (long n = 0; n <= to; ++n) {
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), f.coeffs[static_cast<std::size_t>(n)].get_den_mpz_t());
        au.d.push_back(acc);
    }
    au.window_root_max = 0;
    for (long n = from; n <= to; ++n) {
        Rational root = root_ceiling_6(au.d[static_cast<std::size_t>(n)], static_cast<unsigned long>(n));
        if (root > au.window_root_max) {
            au.window_root_max = root;
            au.argmax = n;
        }
    }
    const long mid = (from + to) / 2;
    au.root_at_mid = root_ceiling_6(au.d[static_cast<std::size_t>(mid)], static_cast<unsigned long>(mid));
    au.root_at_end = root_ceiling_6(au.d[static_cast<std::size_t>(to)], static_cast<unsigned long>(to));
    au.unbounded_growth = au.root_at_end > make_rational(5, 4) * au.root_at_mid;
    return au;
}

std::pair<std::vector<Rational>, RationalPoly> rational_roots(const RationalPoly& p_in) {
    if (p_in.is_zero()) throw DomainError("rational_roots of the zero polynomial");
    std::vector<Rational> roots;
    RationalPoly p = p_in;
    while (p.degree() >= 1 && is_zero(p.coeff(0))) {
        roots.push_back(Rational(0));
        p = p.divmod(RationalPoly::linear_factor(Rational(0))).first;
    }
    if (p.degree() >= 1) {
        Integer den(1);
        for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        const Integer c0 = Rational(p.coeff(0) * den).get_num();
        const Integer cn = Rational(p.leading() * den).get_num();
        auto divisors = [](const Integer& n) {
            std::vector<Integer> ds{Integer(1)};
            for (const auto& f : factor_trial(n)) {
                const std::size_t base = ds.size();
                Integer pk(1);
                for (unsigned e = 1; e <= f.exponent; ++e) {
                    pk *= f.prime;
                    for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
                }
            }
            return ds;
        };
        std::vector<Rational> candidates;
        for (const auto& u : divisors(c0))
            for (const auto& v : divisors(cn)) {
                candidates.push_back(make_rational(u, v));
                candidates.push_back(make_rational(-u, v));
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            while (p.degree() >= 1 && is_zero(p(c))) {
                roots.push_back(c);
                p = p.divmod(RationalPoly::linear_factor(c)).first;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    // normalize the residual to be monic
    if (!p.is_zero()) p = (Rational(1) / p.leading()) * p;
    return {roots, p};
}

// Substituting z^s, the term c z^k d^i contributes c s(s-1)...(s-i+1) z^{s+k-i}.
// The indicial polynomial collects the terms of extreme degree k - i: lowest at
// a finite point, highest at infinity where the local exponent is -s.
IndicialData indicial_exponents(const DifferentialOperator& op_in, const std::optional<Rational>& point) {
    if (op_in.is_zero()) throw DomainError("indicial_exponents: zero operator");
    const DifferentialOperator op = point ? op_in.recentered(*point) : op_in;
    std::optional<long> extreme;
    for (long i = 0; i <= op.order(); ++i) {
        const auto& p = op.coeffs()[static_cast<std::size_t>(i)];
        for (long k = 0; k <= p.degree(); ++k) {
            if (is_zero(p.coeff(static_cast<std::size_t>(k)))) continue;
            const long j = i - k;
            if (!extreme) extreme = j;
            else extreme = point ? std::max(*extreme, j) : std::min(*extreme, j);
        }
    }
    RationalPoly ind;
    for (long i = 0; i <= op.order(); ++i) {
        const long k = i - *extreme;
        if (k < 0) continue;
        const Rational c = op.coeffs()[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(k));
        if (!is_zero(c)) ind += c * falling(i, Rational(0));
    }
    if (!point) {
        // exponent e = -s
        std::vector<Rational> flipped = ind.coeffs();
        for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
        ind = RationalPoly(std::move(flipped));
    }
    IndicialData out;
    out.point = point;
    out.polynomial = ind;
    auto [roots, residual] = rational_roots(ind);
    out.exponents = std::move(roots);
    out.residual = std::move(residual);
    return out;
}

}  // namespace hypcert
