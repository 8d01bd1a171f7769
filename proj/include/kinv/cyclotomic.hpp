#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/laurent_poly.hpp"
#include "kinv/matrix.hpp"

namespace kinv {

/// Q(zeta_N) presented as Q[t] / Phi_N(t).
struct CyclotomicField {
    int n = 1;
    std::vector<Rational> phi;  // monic, ascending, size degree + 1

    std::size_t degree() const noexcept { return phi.size() - 1; }
};

inline std::shared_ptr<const CyclotomicField> make_cyclotomic_field(int n) {
    auto f = std::make_shared<CyclotomicField>();
    f->n = n;
    const IntPoly phi = cyclotomic(n);
    for (const auto& c : phi.coeffs()) f->phi.emplace_back(c);
    return f;
}

namespace detail {

using QPoly = std::vector<Rational>;

inline void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Remainder modulo a monic polynomial.
inline QPoly qmod_monic(QPoly a, const QPoly& m) {
    const std::size_t d = m.size() - 1;
    for (std::size_t k = a.size(); k-- > d;) {
        const Rational c = a[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) a[k - d + j] -= c * m[j];
    }
    if (a.size() > d) a.resize(d);
    return a;
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

/// Quotient and remainder in Q[t]; b nonzero and trimmed.
inline std::pair<QPoly, QPoly> qdivrem(QPoly a, const QPoly& b) {
    qtrim(a);
    if (a.size() < b.size()) return {{}, a};
    QPoly q(a.size() - b.size() + 1, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        const Rational c = a[k + b.size() - 1] / b.back();
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    }
    a.resize(b.size() - 1);
    qtrim(a);
    return {q, a};
}

}  // namespace detail

/// Element of Q(zeta_N), stored as its reduced representative of degree
/// below phi(N).
class CycNumber {
public:
    using FieldPtr = std::shared_ptr<const CyclotomicField>;

    CycNumber() = default;
    CycNumber(FieldPtr f, const Rational& a) : f_(std::move(f)), rep_(f_->degree(), Rational(0)) {
        if (!rep_.empty()) rep_[0] = a;
    }
    CycNumber(FieldPtr f, detail::QPoly poly) : f_(std::move(f)) {
        rep_ = detail::qmod_monic(std::move(poly), f_->phi);
        rep_.resize(f_->degree(), Rational(0));
    }

    /// zeta^k, k taken mod N.
    static CycNumber zeta(const FieldPtr& f, long k) {
        const long n = f->n;
        const long e = ((k % n) + n) % n;
        detail::QPoly p(static_cast<std::size_t>(e) + 1, Rational(0));
        p.back() = 1;
        return CycNumber(f, std::move(p));
    }

    /// Exact value of a Laurent polynomial at zeta^k.
    static CycNumber eval(const FieldPtr& f, const LaurentPoly& p, long k) {
        CycNumber acc(f, Rational(0));
        const auto& c = p.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            acc = acc + CycNumber(f, Rational(c[i])) * zeta(f, k * (p.min_deg() + static_cast<long>(i)));
        }
        return acc;
    }

    const FieldPtr& field() const noexcept { return f_; }
    int order() const noexcept { return f_->n; }
    const std::vector<Rational>& rep() const noexcept { return rep_; }

    bool is_zero() const {
        for (const auto& x : rep_)
            if (x != 0) return false;
        return true;
    }

    /// Image under the embedding zeta -> exp(2 pi i / N).
    std::complex<double> to_complex() const {
        std::complex<double> acc = 0.0;
        const double theta = 2.0 * std::numbers::pi / f_->n;
        for (std::size_t i = 0; i < rep_.size(); ++i)
            acc += rep_[i].get_d() * std::polar(1.0, theta * static_cast<double>(i));
        return acc;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        a.check(b);
        return a.rep_ == b.rep_;
    }

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        a.check(b);
        CycNumber r = a;
        for (std::size_t i = 0; i < r.rep_.size(); ++i) r.rep_[i] += b.rep_[i];
        return r;
    }
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
        a.check(b);
        CycNumber r = a;
        for (std::size_t i = 0; i < r.rep_.size(); ++i) r.rep_[i] -= b.rep_[i];
        return r;
    }
    friend CycNumber operator-(const CycNumber& a) {
        CycNumber r = a;
        for (auto& x : r.rep_) x = -x;
        return r;
    }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        a.check(b);
        return CycNumber(a.f_, detail::qmul(a.rep_, b.rep_));
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Phi_N.
    CycNumber inverse() const {
        detail::QPoly a = rep_;
        detail::qtrim(a);
        if (a.empty()) fail("DivisionByZero", "inverse of zero in a cyclotomic field");
        // Invariant: s * self == r0 (mod phi), s1 * self == r1 (mod phi).
        detail::QPoly r0 = f_->phi, r1 = a;
        detail::QPoly s0, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = detail::qdivrem(r0, r1);
            detail::QPoly qs = detail::qmul(q, s1);
            detail::QPoly s2(std::max(s0.size(), qs.size()), Rational(0));
            for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            detail::qtrim(s2);
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r0 is a nonzero constant (Phi_N is irreducible).
        if (r0.size() != 1) fail("InternalError", "cyclotomic gcd is not a unit");
        const Rational inv = 1 / r0[0];
        for (auto& x : s0) x *= inv;
        return CycNumber(f_, std::move(s0));
    }

    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

    CycNumber pow(long e) const {
        CycNumber base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        CycNumber r(f_, Rational(1));
        while (k) {
            if (k & 1UL) r = r * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return r;
    }

private:
    void check(const CycNumber& b) const {
        if (!f_ || !b.f_) fail("FieldMismatch", "uninitialized cyclotomic number");
        if (f_ != b.f_ && f_->n != b.f_->n) fail("FieldMismatch", "cyclotomic numbers from different fields");
    }

    FieldPtr f_;
    std::vector<Rational> rep_;
};

inline std::ostream& operator<<(std::ostream& os, const CycNumber& x) {
    bool first = true;
    for (std::size_t i = 0; i < x.rep().size(); ++i) {
        if (x.rep()[i] == 0) continue;
        if (!first) os << " + ";
        os << x.rep()[i];
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << '0';
    return os;
}

using CycMatrix = Matrix<CycNumber>;

inline CycMatrix cyc_zero(const CycNumber::FieldPtr& f, std::size_t rows, std::size_t cols) {
    return CycMatrix(rows, cols, CycNumber(f, Rational(0)));
}

inline CycMatrix cyc_identity(const CycNumber::FieldPtr& f, std::size_t n) {
    return CycMatrix::identity(n, CycNumber(f, Rational(0)), CycNumber(f, Rational(1)));
}

// ---------------------------------------------------------------------------
// Linear algebra over a field. `is_zero` and `inv` are customization points
// so the same routines serve Q and Q(zeta_N).
// ---------------------------------------------------------------------------

inline bool field_is_zero(const Rational& x) { return x == 0; }
inline Rational field_inverse(const Rational& x) {
    if (x == 0) fail("DivisionByZero", "inverse of zero");
    return 1 / x;
}
inline bool field_is_zero(const CycNumber& x) { return x.is_zero(); }
inline CycNumber field_inverse(const CycNumber& x) { return x.inverse(); }

/// Row-reduces in place to echelon form; returns the rank and the
/// determinant factor accumulated from pivots and swaps.
template <class F>
std::size_t echelonize(Matrix<F>& a, F* det_out = nullptr) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::size_t rank = 0;
    bool negate = false;
    std::optional<F> det;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t p = rank;
        while (p < m && field_is_zero(a(p, c))) ++p;
        if (p == m) continue;
        if (p != rank) {
            a.swap_rows(p, rank);
            negate = !negate;
        }
        const F inv = field_inverse(a(rank, c));
        if (det_out) det = det ? F(*det * a(rank, c)) : F(a(rank, c));
        std::vector<std::size_t> nz;
        for (std::size_t j = c; j < n; ++j)
            if (!field_is_zero(a(rank, j))) nz.push_back(j);
        for (std::size_t r = rank + 1; r < m; ++r) {
            if (field_is_zero(a(r, c))) continue;
            const F f = a(r, c) * inv;
            for (std::size_t j : nz) a(r, j) = a(r, j) - f * a(rank, j);
        }
        ++rank;
    }
    if (det_out && det) *det_out = negate ? F(-*det) : *det;
    return rank;
}

template <class F>
std::size_t field_rank(Matrix<F> a) {
    return echelonize(a);
}

/// Determinant over a field; `zero` supplies the additive identity.
template <class F>
F field_det(Matrix<F> a, const F& zero, const F& one) {
    if (!a.is_square()) fail("NonSquare", "determinant of a non-square matrix");
    if (a.rows() == 0) return one;
    F d = zero;
    const std::size_t r = echelonize(a, &d);
    return r < a.rows() ? zero : d;
}

template <class F>
Matrix<F> field_inverse_matrix(const Matrix<F>& a, const F& zero, const F& one) {
    if (!a.is_square()) fail("NonSquare", "inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<F> m(n, 2 * n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
        m(i, n + i) = one;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && field_is_zero(m(p, c))) ++p;
        if (p == n) fail("Singular", "matrix is not invertible");
        m.swap_rows(c, p);
        const F inv = field_inverse(m(c, c));
        for (std::size_t j = 0; j < 2 * n; ++j) m(c, j) = m(c, j) * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || field_is_zero(m(r, c))) continue;
            const F f = m(r, c);
            for (std::size_t j = 0; j < 2 * n; ++j) m(r, j) = m(r, j) - f * m(c, j);
        }
    }
    Matrix<F> inv(n, n, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
    return inv;
}

inline CycNumber cyc_det(const CycMatrix& a) {
    const auto& f = a.data().at(0).field();
    return field_det(a, CycNumber(f, Rational(0)), CycNumber(f, Rational(1)));
}

inline CycMatrix cyc_inverse(const CycMatrix& a) {
    const auto& f = a.data().at(0).field();
    return field_inverse_matrix(a, CycNumber(f, Rational(0)), CycNumber(f, Rational(1)));
}

}  // namespace kinv
