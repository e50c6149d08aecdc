#ifndef HYPCERT_SERIES_HPP
#define HYPCERT_SERIES_HPP

// Linear differential operators with polynomial coefficients over Q, their
// coefficient recurrences, and exact truncated power series.

#include "hypcert/poly.hpp"
#include "hypcert/ratcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypcert {

/// L = sum_i p_i(z) d^i with d = d/dz.  p_r is never the zero polynomial.
class DifferentialOperator {
public:
    DifferentialOperator() = default;
    /// coeffs[i] multiplies d^i; trailing zero polynomials are dropped.
    explicit DifferentialOperator(std::vector<RationalPoly> coeffs);

    static DifferentialOperator multiplication(const RationalPoly& p);
    static DifferentialOperator derivation();  // d
    static DifferentialOperator theta();       // z d

    bool is_zero() const { return p_.empty(); }
    /// -1 for the zero operator.
    long order() const { return static_cast<long>(p_.size()) - 1; }
    const std::vector<RationalPoly>& coeffs() const { return p_; }
    RationalPoly coeff(std::size_t i) const { return i < p_.size() ? p_[i] : RationalPoly(); }
    const RationalPoly& leading() const;

    /// Same operator in the coordinate x = z - p.
    DifferentialOperator recentered(const Rational& p) const;
    /// z^{-1} L; every coefficient must vanish at 0.
    DifferentialOperator divided_by_z() const;

    friend DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b);
    friend DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b);
    friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b);
    friend DifferentialOperator operator*(const Rational& s, const DifferentialOperator& a);
    friend bool operator==(const DifferentialOperator&, const DifferentialOperator&) = default;

private:
    void trim();
    std::vector<RationalPoly> p_;
};

std::string to_string(const DifferentialOperator& op);

/// prod(theta + b_i - 1) - z prod(theta + a_j).
DifferentialOperator hyp_operator(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// P d^2 + (P'/2) d + (z - 10)/18 with P = (z-1)(z-2)(z-82).
DifferentialOperator krammer_operator();

/// sum_j q_j(m) a_{m+j} = 0 for all m >= 0, equivalent to L(sum a_n z^n) = 0.
struct RecurrenceScheme {
    long min_shift = 0;
    std::vector<RationalPoly> q;  // q[j - min_shift], in the variable m

    long max_shift() const { return min_shift + static_cast<long>(q.size()) - 1; }
    RationalPoly at(long j) const;
};

RecurrenceScheme operator_to_recurrence(const DifferentialOperator& op);

struct SeriesSolution {
    std::vector<Rational> coeffs;  // a_0..a_T
    long truncation() const { return static_cast<long>(coeffs.size()) - 1; }
};

/// Thrown when the leading recurrence coefficient vanishes where it is needed.
class SingularRecurrence : public DomainError {
public:
    SingularRecurrence(long m, const std::string& what) : DomainError(what), m_(m) {}
    long offending_index() const { return m_; }

private:
    long m_;
};

/// Unique truncated solution with a_0..a_{r-1} prescribed.  Relations that
/// involve only prescribed coefficients are checked for consistency.
SeriesSolution solve_at_ordinary_point(const DifferentialOperator& op, const std::vector<Rational>& initial, long terms);

/// Coefficients of z^m in L(F) for every m whose value is determined by F's truncation.
std::vector<Rational> apply_truncated(const DifferentialOperator& op, const SeriesSolution& f);

/// prod (a_i)_n / (prod (b_j)_n n!)
SeriesSolution pochhammer_series(const std::vector<Rational>& a, const std::vector<Rational>& b, long terms);

SeriesSolution hadamard(const SeriesSolution& f, const SeriesSolution& g);

struct DenominatorAudit {
    std::vector<Integer> d;  // d_0..d_{n1}
    long window_from = 0, window_to = 0;
    Rational window_root_max;  // ceiling, 6 significant digits
    long argmax = 0;
    Rational root_at_mid, root_at_end;
    /// Heuristic: d_n^{1/n} still rising by more than 25% across the second half of the window.
    bool unbounded_growth = false;
};

/// Ceiling of x^{1/n} rounded up to 6 significant digits.
Rational root_ceiling_6(const Integer& x, unsigned long n);

DenominatorAudit denominator_audit(const SeriesSolution& f, long from, long to);

struct IndicialData {
    std::optional<Rational> point;  // nullopt = infinity
    RationalPoly polynomial;        // in s, for solutions z^s (or (z-p)^s; z^{-s} at infinity)
    std::vector<Rational> exponents;  // rational roots with multiplicity, ascending
    RationalPoly residual;          // the factor without rational roots
    bool all_rational() const { return residual.degree() <= 0; }
};

/// Local exponents at p (nullopt for infinity).
IndicialData indicial_exponents(const DifferentialOperator& op, const std::optional<Rational>& point);

/// Rational roots with multiplicity, plus the remaining factor.
std::pair<std::vector<Rational>, RationalPoly> rational_roots(const RationalPoly& p);

}  // namespace hypcert

#endif
