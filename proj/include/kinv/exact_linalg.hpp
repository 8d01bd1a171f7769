#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/laurent_poly.hpp"
#include "kinv/matrix.hpp"

namespace kinv {

/// U * A * V = D with U, V unimodular and D diagonal with d1 | d2 | ... ,
/// zeros last.
struct SmithForm {
    IntMatrix U;
    IntMatrix V;
    IntMatrix D;
    std::vector<BigInt> invariant_factors;  // the min(rows, cols) diagonal entries of D
};

namespace detail {

struct SmithWork {
    IntMatrix D, U, V;

    void row_addmul(std::size_t dst, std::size_t src, const BigInt& k) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(dst, c) += k * D(src, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(dst, c) += k * U(src, c);
    }
    void col_addmul(std::size_t dst, std::size_t src, const BigInt& k) {
        for (std::size_t r = 0; r < D.rows(); ++r) D(r, dst) += k * D(r, src);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, dst) += k * V(r, src);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < D.cols(); ++c) D(r, c) = -D(r, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U(r, c) = -U(r, c);
    }
};

}  // namespace detail

/// Smith normal form by elementary row and column operations. The pivot is
/// always the entry of least nonzero absolute value in the active block,
/// ties broken by row-major position.
inline SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    detail::SmithWork w{a, int_identity(m), int_identity(n)};
    const std::size_t r = std::min(m, n);

    for (std::size_t t = 0; t < r; ++t) {
        while (true) {
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const BigInt& x = w.D(i, j);
                    if (x == 0) continue;
                    if (pi == m || mpz_cmpabs(x.get_mpz_t(), w.D(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) break;  // active block is zero
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);

            bool clean = true;
            const BigInt p = w.D(t, t);
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.D(i, t) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), w.D(i, t).get_mpz_t(), p.get_mpz_t());
                if (q != 0) w.row_addmul(i, t, -q);
                if (w.D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.D(t, j) == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), w.D(t, j).get_mpz_t(), p.get_mpz_t());
                if (q != 0) w.col_addmul(j, t, -q);
                if (w.D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the rest of the block; otherwise fold the
            // offending row into the pivot row and reduce again.
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(w.D(i, j).get_mpz_t(), p.get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            w.row_addmul(t, bad, BigInt(1));
        }
        if (w.D(t, t) < 0) w.negate_row(t);
    }

    SmithForm s{std::move(w.U), std::move(w.V), std::move(w.D), {}};
    for (std::size_t i = 0; i < r; ++i) s.invariant_factors.push_back(s.D(i, i));
    return s;
}

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... with every
/// d_i >= 2 and d_i | d_(i+1).
struct AbelianGroup {
    std::vector<BigInt> invariant_factors;
    int free_rank = 0;

    bool is_finite() const noexcept { return free_rank == 0; }

    std::optional<BigInt> order() const {
        if (!is_finite()) return std::nullopt;
        BigInt o = 1;
        for (const auto& d : invariant_factors) o *= d;
        return o;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i < free_rank; ++i) {
            os << (first ? "" : " + ") << "Z";
            first = false;
        }
        for (const auto& d : invariant_factors) {
            os << (first ? "" : " + ") << "Z/" << d.get_str();
            first = false;
        }
        return first ? "0" : os.str();
    }

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

inline AbelianGroup cokernel_of(const SmithForm& s, std::size_t rows) {
    AbelianGroup g;
    for (const auto& d : s.invariant_factors) {
        if (d == 0) ++g.free_rank;
        else if (d > 1) g.invariant_factors.push_back(d);
    }
    g.free_rank += static_cast<int>(rows - s.invariant_factors.size());
    return g;
}

/// Z^rows / A Z^cols.
inline AbelianGroup cokernel(const IntMatrix& a) { return cokernel_of(smith_normal_form(a), a.rows()); }

/// Matrix of conjugation by the cyclic shift on the rank N-1 root lattice of
/// SU(N), in the simple-root basis: the companion matrix of 1 + t + ... + t^(N-1).
inline IntMatrix companion_tau(int n) {
    if (n < 2) fail("BadRank", "companion_tau needs N >= 2");
    const std::size_t k = static_cast<std::size_t>(n - 1);
    IntMatrix c = int_zero(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) c(i + 1, i) = 1;
    for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -1;
    return c;
}

/// sum_k a_k C^k. Negative powers use the exact inverse of C, so C must be
/// unimodular when p has terms of negative degree.
inline IntMatrix poly_at_matrix(const LaurentPoly& p, const IntMatrix& c) {
    if (!c.is_square()) fail("NonSquare", "poly_at_matrix needs a square matrix");
    const std::size_t n = c.rows();
    IntMatrix out = int_zero(n, n);
    if (p.is_zero()) return out;
    IntMatrix power;
    if (p.min_deg() < 0) {
        if (abs(det_exact(c)) != 1)
            fail("NotUnimodular", "negative powers need a unimodular matrix");
        power = int_power(inverse_unimodular(c), static_cast<unsigned long>(-p.min_deg()));
    } else {
        power = int_power(c, static_cast<unsigned long>(p.min_deg()));
    }
    const auto& coeffs = p.coeffs();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) power = power * c;
        if (coeffs[i] != 0) out = out + power.scaled(coeffs[i]);
    }
    return out;
}

/// Same evaluation with the polynomial pre-shifted to nonnegative degrees:
/// returns q(C) where q = t^(-min_deg) p. Differs from `poly_at_matrix` by the
/// invertible factor C^(-min_deg), so both have the same cokernel.
inline IntMatrix poly_at_matrix_shifted(const LaurentPoly& p, const IntMatrix& c) {
    return poly_at_matrix(p.shifted(-p.min_deg()), c);
}

}  // namespace kinv
