#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"

namespace kinv {

/// Dense row-major matrix over an arbitrary commutative ring `T`.
///
/// The ring only needs value semantics plus `+ - *` and `==`. Operations that
/// need the ring's zero or one take them as arguments, so element types whose
/// constants depend on runtime context (cyclotomic fields) work as well.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) fail("ShapeMismatch", "ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<T>& data() const noexcept { return data_; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    Matrix transpose() const {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        t.data_.reserve(data_.size());
        for (std::size_t c = 0; c < cols_; ++c)
            for (std::size_t r = 0; r < rows_; ++r) t.data_.push_back((*this)(r, c));
        return t;
    }

    /// Submatrix with one row and one column removed.
    Matrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const {
        Matrix m;
        m.rows_ = rows_ - 1;
        m.cols_ = cols_ - 1;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == drop_row) continue;
            for (std::size_t c = 0; c < cols_; ++c)
                if (c != drop_col) m.data_.push_back((*this)(r, c));
        }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] + b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.require_same_shape(b);
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = a.data_[i] - b.data_[i];
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail("ShapeMismatch", "matrix product dimension mismatch");
        if (a.data_.empty() || b.data_.empty()) {
            // Zero-sized operands: the product is all zero, but T{} may not
            // be a valid zero for context-dependent rings; callers with such
            // rings never multiply empty matrices with positive output size.
            return Matrix(a.rows_, b.cols_);
        }
        const T zero = a.data_.front() - a.data_.front();
        Matrix out(a.rows_, b.cols_, zero);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == zero) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
            }
        return out;
    }

    Matrix scaled(const T& s) const {
        Matrix m = *this;
        for (auto& x : m.data_) x = s * x;
        return m;
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) fail("ShapeMismatch", "matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned long e, const T& zero, const T& one) {
    Matrix<T> result = Matrix<T>::identity(m.rows(), zero, one);
    Matrix<T> base = m;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Fraction-free (Bareiss) determinant over an integral domain. `exact_div`
/// must divide exactly; Sylvester's identity guarantees it does.
template <class T, class ExactDiv>
T bareiss_determinant(Matrix<T> a, const T& zero, const T& one, ExactDiv exact_div) {
    if (!a.is_square()) fail("NonSquare", "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return one;
    T prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == zero) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == zero) ++p;
            if (p == n) return zero;
            a.swap_rows(k, p);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        prev = a(k, k);
    }
    T d = a(n - 1, n - 1);
    return negate ? zero - d : d;
}

// ---------------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------------

using IntMatrix = Matrix<BigInt>;

inline IntMatrix int_identity(std::size_t n) { return IntMatrix::identity(n, BigInt(0), BigInt(1)); }

inline IntMatrix int_zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols, BigInt(0)); }

inline IntMatrix int_power(const IntMatrix& m, unsigned long e) {
    return matrix_power(m, e, BigInt(0), BigInt(1));
}

/// Exact determinant via Bareiss elimination.
inline BigInt det_exact(const IntMatrix& a) {
    return bareiss_determinant(a, BigInt(0), BigInt(1), [](const BigInt& x, const BigInt& y) {
        BigInt q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return q;
    });
}

/// Inverse of a unimodular matrix by Gauss-Jordan over the rationals.
inline IntMatrix inverse_unimodular(const IntMatrix& a) {
    if (!a.is_square()) fail("NonSquare", "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<Rational> m(n, 2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) fail("NotUnimodular", "matrix is singular");
        m.swap_rows(c, p);
        const Rational inv = 1 / m(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) m(c, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            const Rational f = m(r, c);
            for (std::size_t j = 0; j < 2 * n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    IntMatrix inv(n, n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m(i, n + j);
            if (x.get_den() != 1) fail("NotUnimodular", "inverse is not integral");
            inv(i, j) = x.get_num();
        }
    return inv;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << m(r, c);
        }
        os << ']';
    }
    return os << ']';
}

}  // namespace kinv
