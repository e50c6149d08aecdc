#ifndef HYPCERT_LINALG_HPP
#define HYPCERT_LINALG_HPP

// Dense exact linear algebra over Rational or CyclotomicNumber.  All
// elimination uses the first nonzero pivot; nothing here compares against
// a tolerance.

#include "hypcert/cyclo.hpp"
#include "hypcert/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hypcert {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<F>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DomainError("ragged matrix literal");
            e_.insert(e_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix diagonal(const std::vector<F>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<F>& entries() const { return e_; }

    F& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = e_[i] + o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = e_[i] - o.e_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const F& s, Matrix m) {
        for (auto& x : m.e_) x = s * x;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = r(i, j) + x * b(k, j);
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    F trace() const {
        require_square("trace");
        F t(0);
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    void require_square(const char* what) const {
        if (!is_square()) throw DomainError(std::string(what) + ": matrix is not square");
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
    }
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> e_;
};

using RationalMatrix = Matrix<Rational>;
using CyclotomicMatrix = Matrix<CyclotomicNumber>;

template <class F>
using Vector = std::vector<F>;

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        const F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            const F f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of the right kernel; empty iff the matrix is injective.
template <class F>
std::vector<Vector<F>> kernel_basis(Matrix<F> m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(Matrix<F> m) {
    m.require_square("determinant");
    const std::size_t n = m.rows();
    F det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m(piv, c))) ++piv;
        if (piv == n) return F(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        const F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            const F f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

/// Throws DomainError for singular input.
template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    m.require_square("inverse");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// det(tI - M) by Faddeev-LeVerrier.
template <class F>
Poly<F> char_poly(const Matrix<F>& a) {
    a.require_square("char_poly");
    const std::size_t n = a.rows();
    std::vector<F> c(n + 1, F(0));
    c[n] = F(1);
    Matrix<F> mk(n, n);
    const auto id = Matrix<F>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk + c[n - k + 1] * id;
        c[n - k] = -((a * mk).trace()) / F(static_cast<long>(k));
    }
    return Poly<F>(std::move(c));
}

/// Companion matrix of a monic polynomial: ones below the diagonal, last column -c_i.
template <class F>
Matrix<F> companion(const Poly<F>& p) {
    if (p.degree() < 1 || !(p.leading() == F(1))) throw DomainError("companion: polynomial must be monic of degree >= 1");
    const std::size_t n = static_cast<std::size_t>(p.degree());
    Matrix<F> m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = F(1);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(i);
    return m;
}

template <class F>
Matrix<F> power(Matrix<F> m, unsigned e) {
    m.require_square("power");
    auto r = Matrix<F>::identity(m.rows());
    while (e) {
        if (e & 1) r = r * m;
        m = m * m;
        e >>= 1;
    }
    return r;
}

/// Eigenvalue exponent with its Jordan block sizes (descending).
struct JordanEntry {
    ResidueClass exponent;
    std::vector<std::size_t> blocks;
    friend bool operator==(const JordanEntry&, const JordanEntry&) = default;
};

template <class F>
Matrix<CyclotomicNumber> to_cyclotomic(const Matrix<F>& m) {
    std::vector<CyclotomicNumber> e(m.entries().begin(), m.entries().end());
    return Matrix<CyclotomicNumber>(m.rows(), m.cols(), std::move(e));
}

/// Jordan data of M, searching eigenvalues among the N-th roots of unity.
/// Throws DomainError when the located eigenvalues do not account for the
/// whole dimension.
inline std::vector<JordanEntry> jordan_shape(const CyclotomicMatrix& m, long conductor) {
    using F = CyclotomicNumber;
    m.require_square("jordan_shape");
    const std::size_t n = m.rows();
    const auto chi = char_poly(m);
    const auto id = Matrix<F>::identity(n);
    std::vector<JordanEntry> out;
    std::size_t found = 0;
    for (long j = 0; j < conductor && found < n; ++j) {
        const F alpha = CyclotomicNumber::zeta(conductor, j);
        if (!is_zero(chi(alpha))) continue;
        const auto b = m - alpha * id;
        std::vector<std::size_t> nullity{0};
        auto bk = id;
        while (true) {
            bk = bk * b;
            std::size_t d = n - rank(bk);
            if (d == nullity.back()) break;
            nullity.push_back(d);
        }
        // blocks of size >= k number nullity[k] - nullity[k-1]
        JordanEntry entry{ResidueClass::from_fraction(j, conductor), {}};
        const std::size_t kmax = nullity.size() - 1;
        for (std::size_t k = kmax; k >= 1; --k) {
            std::size_t at_least_k = nullity[k] - nullity[k - 1];
            std::size_t at_least_k1 = k < kmax ? nullity[k + 1] - nullity[k] : 0;
            for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) entry.blocks.push_back(k);
        }
        found += nullity.back();
        out.push_back(std::move(entry));
    }
    if (found != n)
        throw DomainError("jordan_shape: eigenvalues are not all " + std::to_string(conductor) + "-th roots of unity");
    return out;
}

inline std::vector<JordanEntry> jordan_shape(const RationalMatrix& m, long conductor) {
    return jordan_shape(to_cyclotomic(m), conductor);
}

/// Least common conductor of all entries.
inline long conductor_of(const CyclotomicMatrix& m) {
    long c = 1;
    for (const auto& x : m.entries()) c = lcm(c, x.conductor());
    return c;
}

}  // namespace hypcert

#endif
