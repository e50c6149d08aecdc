#include "hypcert/cyclo.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace hypcert {

namespace {

using IntPoly = std::vector<long long>;

void trim_poly(IntPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of a by a monic b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size() - 1; i + 1 >= b.size(); --i) {
        long long c = a[i];
        q[i - db] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
        if (i == db) break;
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    trim_poly(q);
    return q;
}

std::unique_ptr<CyclotomicTables> build_tables(long n, const std::function<const CyclotomicTables&(long)>& lower) {
    auto t = std::make_unique<CyclotomicTables>();
    t->conductor = n;
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(std::move(p), lower(d).cyclotomic_poly);
    t->cyclotomic_poly = p;
    t->phi = static_cast<long>(p.size()) - 1;
    const long phi = t->phi;
    t->zeta_powers.assign(n, std::vector<long long>(phi, 0));
    std::vector<long long> cur(phi, 0);
    cur[0] = 1;
    for (long e = 0; e < n; ++e) {
        t->zeta_powers[e] = cur;
        // multiply by zeta and reduce the overflow coefficient with Phi_N
        long long top = cur[phi - 1];
        for (long i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < phi; ++i) cur[i] -= top * p[i];
    }
    return t;
}

std::shared_mutex g_tables_mutex;
std::map<long, std::unique_ptr<CyclotomicTables>> g_tables;

const CyclotomicTables& tables_locked(long n) {
    // caller holds the unique lock
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return *it->second;
    auto t = build_tables(n, [](long d) -> const CyclotomicTables& { return tables_locked(d); });
    auto& ref = *t;
    g_tables.emplace(n, std::move(t));
    return ref;
}

// Accumulate a coefficient vector indexed by exponent mod N into the power basis.
std::vector<Rational> reduce_exponents(const std::vector<Rational>& by_exponent, const CyclotomicTables& t) {
    std::vector<Rational> out(t.phi);
    for (long e = 0; e < static_cast<long>(by_exponent.size()); ++e) {
        if (sgn(by_exponent[e]) == 0) continue;
        const auto& z = t.zeta_powers[e % t.conductor];
        for (long i = 0; i < t.phi; ++i)
            if (z[i] != 0) out[i] += by_exponent[e] * static_cast<long>(z[i]);
    }
    return out;
}

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic integer overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic integer overflow");
    return r;
}

}  // namespace

const CyclotomicTables& cyclotomic_tables(long conductor) {
    if (conductor < 1) throw DomainError("conductor must be positive");
    {
        std::shared_lock lock(g_tables_mutex);
        auto it = g_tables.find(conductor);
        if (it != g_tables.end()) return *it->second;
    }
    std::unique_lock lock(g_tables_mutex);
    return tables_locked(conductor);
}

// ---------------------------------------------------------------------------

CyclotomicNumber::CyclotomicNumber() : coeffs_(1) {}

CyclotomicNumber::CyclotomicNumber(const Rational& r) : coeffs_{r} {}

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<Rational> coeffs) : conductor_(conductor) {
    const auto& t = cyclotomic_tables(conductor);
    if (static_cast<long>(coeffs.size()) == t.phi) {
        coeffs_ = std::move(coeffs);
    } else if (static_cast<long>(coeffs.size()) <= conductor) {
        coeffs_ = reduce_exponents(coeffs, t);
    } else {
        throw DomainError("coefficient vector longer than the conductor");
    }
}

CyclotomicNumber CyclotomicNumber::zeta(long conductor, long exponent) {
    const auto& t = cyclotomic_tables(conductor);
    const auto& z = t.zeta_powers[mod(exponent, conductor)];
    std::vector<Rational> c(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) c[i] = static_cast<long>(z[i]);
    return CyclotomicNumber(conductor, std::move(c));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(const ResidueClass& x, long conductor) {
    Rational scaled = x.value() * conductor;
    if (!is_integer(scaled))
        throw DomainError("root_of_unity: denominator of " + to_string(x) + " does not divide " +
                          std::to_string(conductor));
    return zeta(conductor, scaled.get_num().get_si());
}

CyclotomicNumber CyclotomicNumber::lifted(long m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw DomainError("cannot lift conductor " + std::to_string(conductor_) +
                                               " to " + std::to_string(m));
    const auto& t = cyclotomic_tables(m);
    const long step = m / conductor_;
    std::vector<Rational> out(t.phi);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (sgn(coeffs_[j]) == 0) continue;
        const auto& z = t.zeta_powers[(static_cast<long>(j) * step) % m];
        for (long i = 0; i < t.phi; ++i)
            if (z[i] != 0) out[i] += coeffs_[j] * static_cast<long>(z[i]);
    }
    CyclotomicNumber r;
    r.conductor_ = m;
    r.coeffs_ = std::move(out);
    return r;
}

bool CyclotomicNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool CyclotomicNumber::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool CyclotomicNumber::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic number is not rational");
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    const long m = lcm(conductor_, o.conductor_);
    if (m != conductor_) *this = lifted(m);
    if (o.conductor_ == m) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    } else {
        auto ol = o.lifted(m);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += ol.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    const long m = lcm(conductor_, o.conductor_);
    if (o.conductor_ == 1) {
        for (auto& c : coeffs_) c *= o.coeffs_[0];
        return *this;
    }
    if (conductor_ == 1) {
        Rational s = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    const CyclotomicNumber a = lifted(m);
    const CyclotomicNumber b = o.lifted(m);
    const auto& t = cyclotomic_tables(m);
    std::vector<Rational> conv(2 * t.phi - 1);
    for (long i = 0; i < t.phi; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (long j = 0; j < t.phi; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    conductor_ = m;
    coeffs_ = reduce_exponents(conv, t);
    return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw DomainError("division by zero in cyclotomic field");
    if (is_rational()) return CyclotomicNumber(Rational(1) / coeffs_[0]);
    const long n = static_cast<long>(coeffs_.size());
    // Solve (multiplication by this) * y = 1 over Q by Gauss-Jordan elimination.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (long j = 0; j < n; ++j) {
        auto col = *this * zeta(conductor_, j);
        for (long i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
    }
    a[0][n] = 1;
    for (long c = 0; c < n; ++c) {
        long piv = c;
        while (piv < n && sgn(a[piv][c]) == 0) ++piv;
        if (piv == n) throw std::logic_error("singular multiplication matrix");
        std::swap(a[piv], a[c]);
        Rational inv = Rational(1) / a[c][c];
        for (long j = c; j <= n; ++j) a[c][j] *= inv;
        for (long i = 0; i < n; ++i) {
            if (i == c || sgn(a[i][c]) == 0) continue;
            Rational f = a[i][c];
            for (long j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> y(n);
    for (long i = 0; i < n; ++i) y[i] = a[i][n];
    return CyclotomicNumber(conductor_, std::move(y));
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
    if (o.conductor_ == 1) {
        if (sgn(o.coeffs_[0]) == 0) throw DomainError("division by zero in cyclotomic field");
        for (auto& c : coeffs_) c /= o.coeffs_[0];
        return *this;
    }
    return *this *= o.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    const long m = lcm(a.conductor_, b.conductor_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
    if (conductor_ <= 2) return *this;
    if (gcd(mod(k, conductor_), conductor_) != 1)
        throw DomainError("galois: " + std::to_string(k) + " is not a unit mod " + std::to_string(conductor_));
    std::vector<Rational> by_exponent(conductor_);
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        by_exponent[mod(static_cast<long>(j) * k, conductor_)] += coeffs_[j];
    return CyclotomicNumber(conductor_, std::move(by_exponent));
}

std::string CyclotomicNumber::key() const {
    std::string s = std::to_string(conductor_);
    for (const auto& c : coeffs_) {
        s += ':';
        s += to_string(c);
    }
    return s;
}

std::string to_string(const CyclotomicNumber& v) {
    if (v.is_rational()) return to_string(v.coeffs()[0]);
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < v.coeffs().size(); ++j) {
        const auto& c = v.coeffs()[j];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        if (j == 0) os << to_string(a);
        else {
            if (a != 1) os << to_string(a) << "*";
            os << "z" << v.conductor();
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    return os.str();
}

CyclotomicNumber galois_apply(long k, const CyclotomicNumber& v) { return v.galois(k); }

// ---------------------------------------------------------------------------

CyclotomicInteger::CyclotomicInteger(long conductor, long long value)
    : conductor_(conductor), coeffs_(cyclotomic_tables(conductor).phi, 0) {
    coeffs_[0] = value;
}

CyclotomicInteger CyclotomicInteger::zeta(long conductor, long exponent) {
    CyclotomicInteger r(conductor, 0);
    r.coeffs_ = cyclotomic_tables(conductor).zeta_powers[mod(exponent, conductor)];
    return r;
}

std::optional<CyclotomicInteger> CyclotomicInteger::from(const CyclotomicNumber& v, long conductor) {
    auto l = v.lifted(conductor);
    if (!l.is_integral()) return std::nullopt;
    CyclotomicInteger r(conductor, 0);
    for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
        const auto& num = l.coeffs()[i].get_num();
        if (!num.fits_slong_p()) return std::nullopt;
        r.coeffs_[i] = num.get_si();
    }
    return r;
}

bool CyclotomicInteger::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    CyclotomicInteger r = *this;
    for (auto& c : r.coeffs_) c = checked_mul(c, -1);
    return r;
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
    if (o.conductor_ != conductor_) throw DomainError("conductor mismatch in cyclotomic integer sum");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], o.coeffs_[i]);
    return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) { return *this += -o; }

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
    if (a.conductor_ != b.conductor_) throw DomainError("conductor mismatch in cyclotomic integer product");
    const auto& t = cyclotomic_tables(a.conductor_);
    const long phi = t.phi;
    std::vector<long long> conv(2 * phi - 1, 0);
    for (long i = 0; i < phi; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (b.coeffs_[j] == 0) continue;
            conv[i + j] = checked_add(conv[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
        }
    }
    CyclotomicInteger r(a.conductor_, 0);
    for (long e = 0; e < 2 * phi - 1; ++e) {
        if (conv[e] == 0) continue;
        if (e < phi) {
            r.coeffs_[e] = checked_add(r.coeffs_[e], conv[e]);
            continue;
        }
        const auto& z = t.zeta_powers[e % t.conductor];
        for (long i = 0; i < phi; ++i)
            if (z[i] != 0) r.coeffs_[i] = checked_add(r.coeffs_[i], checked_mul(conv[e], z[i]));
    }
    return r;
}

CyclotomicNumber CyclotomicInteger::to_number() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = static_cast<long>(coeffs_[i]);
    return CyclotomicNumber(conductor_, std::move(c));
}

// ---------------------------------------------------------------------------

std::vector<long> unit_group(long conductor) { return units_mod(conductor); }

long SubfieldDescriptor::degree() const {
    return euler_phi(conductor) / static_cast<long>(stabilizer.size());
}

SubfieldDescriptor make_subfield(long conductor, std::vector<long> stabilizer) {
    if (conductor < 1) throw DomainError("subfield conductor must be positive");
    for (auto& k : stabilizer) k = conductor == 1 ? 1 : mod(k, conductor);
    std::sort(stabilizer.begin(), stabilizer.end());
    stabilizer.erase(std::unique(stabilizer.begin(), stabilizer.end()), stabilizer.end());
    std::set<long> h(stabilizer.begin(), stabilizer.end());
    if (!h.count(conductor == 1 ? 1 : 1 % conductor)) throw DomainError("stabilizer must contain 1");
    for (long x : stabilizer) {
        if (conductor > 1 && gcd(x, conductor) != 1) throw DomainError("stabilizer element is not a unit");
        for (long y : stabilizer)
            if (conductor > 1 && !h.count(mod(x * y, conductor)))
                throw DomainError("stabilizer is not closed under multiplication");
    }
    if (euler_phi(conductor) % static_cast<long>(stabilizer.size()) != 0)
        throw DomainError("stabilizer order does not divide phi(N)");
    return SubfieldDescriptor{conductor, std::move(stabilizer)};
}

SubfieldDescriptor fixed_field(std::span<const CyclotomicNumber> traces, long conductor) {
    std::vector<CyclotomicNumber> lifted;
    lifted.reserve(traces.size());
    for (const auto& t : traces) lifted.push_back(t.lifted(conductor));
    std::vector<long> h;
    for (long k : unit_group(conductor)) {
        bool fixes = std::all_of(lifted.begin(), lifted.end(),
                                 [&](const CyclotomicNumber& t) { return t.galois(k) == t; });
        if (fixes) h.push_back(k);
    }
    return make_subfield(conductor, std::move(h));
}

SubfieldDescriptor lift_subfield(const SubfieldDescriptor& s, long m) {
    if (m % s.conductor != 0) throw DomainError("lift_subfield: conductor does not divide target");
    std::set<long> h(s.stabilizer.begin(), s.stabilizer.end());
    std::vector<long> out;
    for (long k : unit_group(m)) {
        long r = s.conductor == 1 ? 1 : mod(k, s.conductor);
        if (h.count(r)) out.push_back(k);
    }
    return SubfieldDescriptor{m, std::move(out)};
}

SubfieldDescriptor canonical_subfield(const SubfieldDescriptor& s) {
    auto reduce = [](long k, long d) { return d <= 1 ? 1L : mod(k, d); };
    const std::set<long> h(s.stabilizer.begin(), s.stabilizer.end());
    for (long d = 1; d <= s.conductor; ++d) {
        if (s.conductor % d != 0) continue;
        // the field lies in Q(zeta_d) iff H contains the kernel of (Z/N)^x -> (Z/d)^x
        bool contains_kernel = true;
        for (long k : unit_group(s.conductor)) {
            if (reduce(k, d) == reduce(1, d) && !h.count(k)) {
                contains_kernel = false;
                break;
            }
        }
        if (!contains_kernel) continue;
        std::set<long> image;
        for (long k : s.stabilizer) image.insert(reduce(k, d));
        return SubfieldDescriptor{d, std::vector<long>(image.begin(), image.end())};
    }
    return s;
}

bool same_field(const SubfieldDescriptor& a, const SubfieldDescriptor& b) {
    const long m = lcm(a.conductor, b.conductor);
    return lift_subfield(a, m).stabilizer == lift_subfield(b, m).stabilizer;
}

bool is_subfield(const SubfieldDescriptor& a, const SubfieldDescriptor& b) {
    const long m = lcm(a.conductor, b.conductor);
    auto ha = lift_subfield(a, m).stabilizer;
    auto hb = lift_subfield(b, m).stabilizer;
    return std::includes(ha.begin(), ha.end(), hb.begin(), hb.end());
}

SubfieldDescriptor rational_field() { return SubfieldDescriptor{1, {1}}; }

SubfieldDescriptor full_cyclotomic_field(long conductor) {
    return SubfieldDescriptor{conductor, {conductor == 1 ? 1 : 1 % conductor}};
}

SubfieldDescriptor real_cyclotomic_field(long conductor) {
    if (conductor <= 2) return full_cyclotomic_field(conductor);
    return make_subfield(conductor, {1, conductor - 1});
}

// ---------------------------------------------------------------------------

namespace {

int legendre(long a, long p) {
    long r = mod(a, p);
    if (r == 0) return 0;
    long e = (p - 1) / 2, result = 1, base = r;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

CyclotomicNumber gauss_sum(long p) {
    std::vector<Rational> by_exponent(p);
    for (long k = 1; k < p; ++k) by_exponent[k] = legendre(k, p);
    return CyclotomicNumber(p, std::move(by_exponent));
}

}  // namespace

CyclotomicNumber sqrt_as_cyclotomic(const Integer& d) {
    if (d == 0 || d == 1) throw DomainError("sqrt_as_cyclotomic: d must not be 0 or 1");
    if (!is_squarefree(d)) throw DomainError("sqrt_as_cyclotomic: d must be squarefree");
    CyclotomicNumber g(1);
    Integer star(1);  // product of p* = (-1)^{(p-1)/2} p over odd p | d
    for (const auto& f : factor_trial(d)) {
        if (f.prime == 2) continue;
        long p = f.prime.get_si();
        g *= gauss_sum(p);
        star *= (p % 4 == 1) ? Integer(p) : Integer(-p);
    }
    Integer unit = d / star;  // one of 1, -1, 2, -2
    if (unit == -1) g *= CyclotomicNumber::zeta(4, 1);
    else if (unit == 2) g *= CyclotomicNumber::zeta(8, 1) + CyclotomicNumber::zeta(8, 7);
    else if (unit == -2) g *= CyclotomicNumber::zeta(8, 1) + CyclotomicNumber::zeta(8, 3);
    else if (unit != 1) throw std::logic_error("unexpected unit in sqrt_as_cyclotomic");
    return g;
}

std::vector<long> quadratic_subfields(const SubfieldDescriptor& s) {
    static std::shared_mutex mutex;
    static std::map<long, CyclotomicNumber> sqrt_cache;
    auto cached_sqrt = [&](long d) {
        {
            std::shared_lock lock(mutex);
            auto it = sqrt_cache.find(d);
            if (it != sqrt_cache.end()) return it->second;
        }
        auto g = sqrt_as_cyclotomic(Integer(d));
        std::unique_lock lock(mutex);
        sqrt_cache.emplace(d, g);
        return g;
    };
    std::vector<long> out;
    const long n = s.conductor;
    for (long d = -n; d <= n; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(Integer(d))) continue;
        long disc = std::abs(quadratic_discriminant(Integer(d)).get_si());
        if (n % disc != 0) continue;
        auto g = cached_sqrt(d);
        bool fixed = std::all_of(s.stabilizer.begin(), s.stabilizer.end(),
                                 [&](long k) { return g.galois(mod(k, disc)) == g; });
        if (fixed) out.push_back(d);
    }
    return out;
}

}  // namespace hypcert

std::size_t std::hash<hypcert::CyclotomicInteger>::operator()(const hypcert::CyclotomicInteger& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.conductor());
    for (long long c : v.coeffs()) h = h * 1000003u ^ std::hash<long long>{}(c);
    return h;
}
