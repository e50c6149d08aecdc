#ifndef HYPCERT_POLY_HPP
#define HYPCERT_POLY_HPP

// Dense univariate polynomials over an exact field F (Rational or
// CyclotomicNumber).  Coefficients are stored low degree first with no
// trailing zeros; the zero polynomial has no coefficients.

#include "hypcert/cyclo.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hypcert {

template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
    static Poly monomial(const F& a, std::size_t degree) {
        std::vector<F> c(degree + 1, F(0));
        c[degree] = a;
        return Poly(std::move(c));
    }
    /// t - root
    static Poly linear_factor(const F& root) { return Poly(std::vector<F>{-root, F(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F(0); }
    F leading() const { return c_.empty() ? F(0) : c_.back(); }

    F operator()(const F& x) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<F> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<long>(i));
        return Poly(std::move(d));
    }

    /// p(x + shift)
    Poly shifted(const F& shift) const {
        Poly out;
        Poly x_plus = Poly(std::vector<F>{shift, F(1)});
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x_plus + constant(*it);
        return out;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (hypcert::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const F& s, const Poly& p) { return constant(s) * p; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        Poly q, r = *this;
        const F lead_inv = F(1) / d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            F f = r.leading() * lead_inv;
            Poly m = monomial(f, static_cast<std::size_t>(r.degree() - d.degree()));
            q += m;
            r -= m * d;
        }
        return {q, r};
    }

private:
    void trim() {
        while (!c_.empty() && hypcert::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
std::string to_string(const Poly<F>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string s;
    for (long i = p.degree(); i >= 0; --i) {
        const F& c = p.coeffs()[i];
        if (is_zero(c)) continue;
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")";
        if (i >= 1) s += "*" + var;
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

using RationalPoly = Poly<Rational>;

}  // namespace hypcert

#endif
