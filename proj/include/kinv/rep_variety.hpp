#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/cyclotomic.hpp"
#include "kinv/error.hpp"
#include "kinv/exact_linalg.hpp"
#include "kinv/knots.hpp"
#include "kinv/laurent_poly.hpp"

namespace kinv {

/// Point of the maximal torus H of SU(N) in simple-root coordinates, each
/// coordinate reduced into [0, 1).
struct TorusElement {
    int n = 2;
    std::vector<Rational> coords;

    TorusElement() = default;
    TorusElement(int rank_plus_one, std::vector<Rational> c) : n(rank_plus_one), coords(std::move(c)) {
        for (auto& x : coords) x = frac(x);
    }

    static Rational frac(const Rational& x) {
        BigInt fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        return x - Rational(fl);
    }

    bool is_zero() const {
        for (const auto& x : coords)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const TorusElement&, const TorusElement&) = default;
};

struct FlatPoint {
    TorusElement h;
    long k_lift = 0;
};

struct ClockShift {
    CycMatrix clock;  // rho(x) = c diag(1, zeta, ..., zeta^(N-1))
    CycMatrix shift;  // rho(y): e_j -> e_(j+1), corner entry -1 for even N
    long zeta_power;  // zeta = z^zeta_power for the field generator z

    const CycNumber::FieldPtr& field() const { return clock.data().front().field(); }
    CycNumber zeta(long k = 1) const { return CycNumber::zeta(field(), k * zeta_power); }
};

/// For odd N the field is Q(zeta_N) and c = 1. For even N the diagonal matrix
/// has determinant -1, so the field is Q(zeta_2N) and c = zeta_2N, which
/// gives det rho(x) = 1 without changing the commutator.
inline ClockShift clock_shift(int n) {
    if (n < 2) fail("BadRank", "clock_shift needs N >= 2");
    const bool even = n % 2 == 0;
    const auto f = make_cyclotomic_field(even ? 2 * n : n);
    const long step = even ? 2 : 1;
    const std::size_t sz = static_cast<std::size_t>(n);
    ClockShift cs{cyc_zero(f, sz, sz), cyc_zero(f, sz, sz), step};
    for (std::size_t i = 0; i < sz; ++i)
        cs.clock(i, i) = CycNumber::zeta(f, step * static_cast<long>(i) + (even ? 1 : 0));
    for (std::size_t j = 0; j + 1 < sz; ++j) cs.shift(j + 1, j) = CycNumber(f, Rational(1));
    cs.shift(0, sz - 1) = CycNumber(f, Rational(even ? -1 : 1));
    return cs;
}

/// a b a^-1 b^-1.
inline CycMatrix group_commutator(const CycMatrix& a, const CycMatrix& b) {
    return a * b * cyc_inverse(a) * cyc_inverse(b);
}

/// Dimension over the coefficient field of {X : X g = g X for every g in gens}.
inline std::size_t centralizer_dimension(const std::vector<CycMatrix>& gens) {
    if (gens.empty()) fail("BadInput", "centralizer of an empty set");
    const std::size_t n = gens.front().rows();
    const auto& f = gens.front().data().front().field();
    const std::size_t unknowns = n * n;
    CycMatrix sys = cyc_zero(f, gens.size() * unknowns, unknowns);
    std::size_t row = 0;
    for (const auto& a : gens) {
        // (X A - A X)_{ij} = sum_l X_il A_lj - sum_l A_il X_lj
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j, ++row)
                for (std::size_t l = 0; l < n; ++l) {
                    if (!a(l, j).is_zero()) sys(row, i * n + l) = sys(row, i * n + l) + a(l, j);
                    if (!a(i, l).is_zero()) sys(row, l * n + j) = sys(row, l * n + j) - a(i, l);
                }
    }
    return unknowns - field_rank(std::move(sys));
}

/// Checks the flat PSU(N) structure on T^3 and returns the number of points
/// alpha_0 .. alpha_(N-1) of the representation variety.
///
/// Verified exactly: det rho(x) = det rho(y) = 1, [rho(x), rho(y)] = zeta I,
/// the commutant of {rho(x), rho(y)} is the scalars, and the N central
/// elements zeta^k I are distinct, have determinant 1, and commute with both.
inline int verify_t3_points(int n) {
    const ClockShift cs = clock_shift(n);
    const auto& f = cs.field();
    const std::size_t sz = static_cast<std::size_t>(n);
    const CycNumber one(f, Rational(1));
    auto check = [&](bool ok, const std::string& what) {
        if (!ok) fail("VerificationFailed", what + " (N=" + std::to_string(n) + ")");
    };
    check(cyc_det(cs.clock) == one, "det rho(x) != 1");
    check(cyc_det(cs.shift) == one, "det rho(y) != 1");
    const CycMatrix zeta_id = cyc_identity(f, sz).scaled(cs.zeta());
    check(group_commutator(cs.clock, cs.shift) == zeta_id, "[rho(x), rho(y)] != zeta I");
    check(centralizer_dimension({cs.clock, cs.shift}) == 1, "rho is reducible");

    int points = 0;
    std::vector<CycMatrix> seen;
    for (long k = 0; k < n; ++k) {
        const CycMatrix z = cyc_identity(f, sz).scaled(cs.zeta(k));
        if (!(cyc_det(z) == one)) continue;
        if (!(z * cs.clock == cs.clock * z) || !(z * cs.shift == cs.shift * z)) continue;
        for (const auto& s : seen) check(!(s == z), "central elements coincide");
        seen.push_back(z);
        ++points;
    }
    check(points == n, "wrong number of central lifts");
    return points;
}

struct CsLadder {
    std::vector<Rational> values;  // Chern-Simons invariant of alpha_k in R/Z
    int d_step = 4;
    Rational kappa_step;
    int d_loop = 0;
    Rational kappa_loop;
};

/// CS(alpha_k) = -k/N mod 1, with spectral flow 4 and energy 1/N per step,
/// 4N and 1 around the full loop.
inline CsLadder chern_simons_ladder(int n) {
    if (n < 2) fail("BadRank", "chern_simons_ladder needs N >= 2");
    CsLadder l;
    for (int k = 0; k < n; ++k) l.values.push_back(make_rational(BigInt((n - k) % n), BigInt(n)));
    l.kappa_step = make_rational(1, n);
    l.d_loop = n * l.d_step;
    l.kappa_loop = Rational(n) * l.kappa_step;
    return l;
}

/// ker Delta(tau_v) on H, listed explicitly. With U M V = D the solutions are
/// h = V (c_1/d_1, ..., c_r/d_r) mod 1 for 0 <= c_i < d_i.
inline std::vector<TorusElement> kernel_torus_solutions(const LaurentPoly& delta, int n, const BigInt& cap) {
    const IntMatrix m = poly_at_matrix(delta, companion_tau(n));
    const SmithForm s = smith_normal_form(m);
    const std::size_t r = m.rows();
    BigInt count = 1;
    for (const auto& d : s.invariant_factors) {
        if (d == 0) fail("Degenerate", "kernel of Delta(tau_v) is infinite at N=" + std::to_string(n));
        count *= d;
    }
    if (count > cap) fail("CapExceeded", "kernel has " + count.get_str() + " elements, cap is " + cap.get_str());

    std::vector<TorusElement> out;
    out.reserve(count.get_ui());
    std::vector<BigInt> c(r, BigInt(0));
    while (true) {
        std::vector<Rational> y(r);
        for (std::size_t i = 0; i < r; ++i) y[i] = make_rational(c[i], s.invariant_factors[i]);
        std::vector<Rational> h(r, Rational(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) h[i] += Rational(s.V(i, j)) * y[j];
        TorusElement t(n, std::move(h));
        for (std::size_t i = 0; i < r; ++i) {
            Rational mh = 0;
            for (std::size_t j = 0; j < r; ++j) mh += Rational(m(i, j)) * t.coords[j];
            if (mh.get_den() != 1) fail("VerificationFailed", "kernel element fails M h = 0 mod 1");
        }
        out.push_back(std::move(t));

        std::size_t i = 0;
        while (i < r) {
            if (++c[i] < s.invariant_factors[i]) break;
            c[i] = 0;
            ++i;
        }
        if (i == r) break;
    }
    return out;
}

/// Integer system for torus-valued meridian images sigma(m_i) = h_i v:
/// each crossing gives h_result = tau^s h_under + (1 - tau^s) h_over.
/// The base meridian's block is omitted (pinned to h = 0).
inline IntMatrix wirtinger_torus_system(const WirtingerPresentation& w, int n) {
    const IntMatrix c = companion_tau(n);
    const IntMatrix c_inv = int_power(c, static_cast<unsigned long>(n - 1));
    const std::size_t b = static_cast<std::size_t>(n - 1);
    const IntMatrix eye = int_identity(b);

    std::vector<int> col_of(static_cast<std::size_t>(w.n_generators), -1);
    int next = 0;
    for (int g = 0; g < w.n_generators; ++g)
        if (g != w.base_meridian) col_of[static_cast<std::size_t>(g)] = next++;

    IntMatrix a = int_zero(w.relations.size() * b, static_cast<std::size_t>(next) * b);
    auto add_block = [&](std::size_t rel, int gen, const IntMatrix& blk) {
        const int col = col_of[static_cast<std::size_t>(gen)];
        if (col < 0) return;
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) a(rel * b + i, static_cast<std::size_t>(col) * b + j) += blk(i, j);
    };
    for (std::size_t r = 0; r < w.relations.size(); ++r) {
        const auto& rel = w.relations[r];
        const IntMatrix& ts = rel.sign > 0 ? c : c_inv;
        add_block(r, rel.under, ts);
        add_block(r, rel.over, eye - ts);
        add_block(r, rel.result, eye.scaled(BigInt(-1)));
    }
    return a;
}

/// Group of torus solutions of the pinned Wirtinger system.
inline AbelianGroup wirtinger_torus_group(const WirtingerPresentation& w, int n) {
    if (n < 2) fail("BadRank", "wirtinger_torus_group needs N >= 2");
    const IntMatrix a = wirtinger_torus_system(w, n);
    AbelianGroup g;
    if (a.cols() == 0) return g;
    const SmithForm s = smith_normal_form(a);
    std::size_t rank = 0;
    for (const auto& d : s.invariant_factors)
        if (d != 0) ++rank;
    if (rank < a.cols()) fail("Degenerate", "torus solution set is infinite at N=" + std::to_string(n));
    for (const auto& d : s.invariant_factors)
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

/// Number of homomorphisms sigma with sigma(m_i) in v H and sigma(m_base) = v.
inline BigInt wirtinger_torus_count(const WirtingerPresentation& w, int n) {
    return *wirtinger_torus_group(w, n).order();
}

}  // namespace kinv
