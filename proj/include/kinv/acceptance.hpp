#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/exact_linalg.hpp"
#include "kinv/invariants.hpp"
#include "kinv/knot_table.hpp"
#include "kinv/knots.hpp"
#include "kinv/laurent_poly.hpp"
#include "kinv/mahler.hpp"
#include "kinv/random.hpp"
#include "kinv/rep_variety.hpp"
#include "kinv/series.hpp"

namespace kinv::acceptance {

struct Outcome {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;  // 0: no limit
    std::string detail;
};

/// Collects failures inside one criterion; the first few are reported.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) msgs_ << (failures_ > 1 ? "; " : "") << what;
    }
    bool ok() const { return failures_ == 0; }
    std::string detail() const {
        std::string s = msgs_.str();
        if (failures_ > 3) s += "; ... " + std::to_string(failures_) + " failures";
        return s;
    }
    void note(const std::string& s) { notes_ = s; }
    const std::string& notes() const { return notes_; }

private:
    int failures_ = 0;
    std::ostringstream msgs_;
    std::string notes_;
};

namespace detail {

inline LaurentPoly corpus_delta(const std::string& name) { return alexander_burau(KnotTable::builtin().at(name)); }

inline bool close_rel(double a, double b, double rel) { return std::fabs(a - b) <= rel * std::max(1.0, std::fabs(b)); }

inline void alexander_cross_method(Check& c) {
    for (const auto& [name, b] : KnotTable::builtin().entries()) {
        const LaurentPoly burau = alexander_burau(b);
        const LaurentPoly fox = alexander_fox(braid_closure_wirtinger(b));
        c.expect(burau == fox, name + ": Burau " + burau.to_string() + " != Fox " + fox.to_string());
        c.expect(burau.at_one() == 1, name + ": Delta(1) != 1");
        c.expect(burau.involute() == burau, name + ": not symmetric");
    }
}

inline void three_routes(Check& c) {
    for (const auto& [name, b] : KnotTable::builtin().entries()) {
        const LaurentPoly d = alexander_burau(b);
        for (int n = 2; n <= 30; ++n) {
            const std::string at = name + " N=" + std::to_string(n);
            try {
                const RelativeInvariant q = q_relative(d, n);
                const double exact = q.signed_product.get_d();
                c.expect(close_rel(q.float_product.real(), exact, 1e-6) &&
                             std::fabs(q.float_product.imag()) <= 1e-6 * std::max(1.0, std::fabs(exact)),
                         at + ": float route disagrees");
            } catch (const Error& e) {
                c.expect(false, at + ": " + e.kind());
            }
        }
    }
    c.expect(q_relative(corpus_delta("3_1"), 2).value == 3, "trefoil N=2 != 3");
    c.expect(q_relative(corpus_delta("4_1"), 2).value == 5, "figure-eight N=2 != 5");
    c.expect(q_relative(corpus_delta("4_1"), 3).value == 16, "figure-eight N=3 != 16");
}

inline void degeneracy(Check& c) {
    const LaurentPoly d = corpus_delta("3_1");
    for (int n : {6, 12, 18}) {
        const RelativeInvariant q = q_relative(d, n);
        const std::string at = "trefoil N=" + std::to_string(n);
        c.expect(q.degenerate && q.value == 0, at + ": not degenerate");
        c.expect(branched_cover_homology(d, n).free_rank >= 1, at + ": homology has no free part");
    }
}

inline void k3_bookkeeping(Check& c) {
    for (int n = 2; n <= 10; ++n) {
        const std::string at = "N=" + std::to_string(n);
        const BigInt c2 = BigInt(n) * (n * n - 1);
        const BigInt c1_sq = BigInt(2) * (n + 1) * (n + 1) * (n - 1);
        const Rational k = kappa(n, c2, c1_sq);
        c.expect(k == Rational(n) - make_rational(1, n), at + ": K3 kappa = " + k.get_str());
        const ManifoldTopology k3{"K3", 3, 0, 24, -16};
        c.expect(formal_dimension(n, k, k3) == 0, at + ": K3 dimension != 0");
        const K3Bundle kb = k3_bundle(n);
        c.expect(kb.c2 == c2 && kb.c1_sq == c1_sq, at + ": k3_bundle data differ");
        c.expect(k3_invariant() == 1, at + ": q(K3) != 1");

        const Rational kq = kappa(n, 0, -1);
        c.expect(kq == make_rational(n - 1, 2 * n), at + ": blow-up kappa = " + kq.get_str());
        const ManifoldTopology point{"b2+=b1=0", 0, 0, {}, {}};
        const BigInt framed = formal_dimension(n, kq, point) + (n * n - 1);
        c.expect(framed == 2 * (n - 1), at + ": framed dimension = " + framed.get_str());
    }
}

inline void t3_variety(Check& c) {
    for (int n = 2; n <= 12; ++n) {
        const std::string at = "N=" + std::to_string(n);
        try {
            c.expect(verify_t3_points(n) == n, at + ": wrong point count");
        } catch (const Error& e) {
            c.expect(false, at + ": " + e.what());
        }
        const CsLadder l = chern_simons_ladder(n);
        for (int k = 0; k < n; ++k) {
            Rational expect = make_rational(-k, n);
            expect = TorusElement::frac(expect);
            c.expect(l.values[static_cast<std::size_t>(k)] == expect, at + ": CS(alpha_" + std::to_string(k) + ")");
        }
        c.expect(l.d_step == 4 && l.kappa_step == make_rational(1, n), at + ": step constants");
        c.expect(l.d_loop == 4 * n && l.kappa_loop == 1, at + ": loop constants");
    }
}

inline void number_det(Check& c) {
    for (const std::string name : {"3_1", "4_1", "5_2"}) {
        const BraidWord b = KnotTable::builtin().at(name);
        const LaurentPoly d = alexander_burau(b);
        const WirtingerPresentation w = braid_closure_wirtinger(b);
        for (int n = 2; n <= 7; ++n) {
            const std::string at = name + " N=" + std::to_string(n);
            const RelativeInvariant q = q_relative(d, n);
            if (q.degenerate) {
                bool kernel_infinite = false, wirt_infinite = false;
                try {
                    kernel_torus_solutions(d, n, BigInt(1000000));
                } catch (const Error& e) {
                    kernel_infinite = e.kind() == "Degenerate";
                }
                try {
                    wirtinger_torus_count(w, n);
                } catch (const Error& e) {
                    wirt_infinite = e.kind() == "Degenerate";
                }
                c.expect(kernel_infinite && wirt_infinite, at + ": degenerate case not reported by all routes");
                continue;
            }
            const auto sols = kernel_torus_solutions(d, n, BigInt(1000000));
            const BigInt wc = wirtinger_torus_count(w, n);
            c.expect(BigInt(sols.size()) == q.value && wc == q.value,
                     at + ": kernel " + std::to_string(sols.size()) + ", wirtinger " + wc.get_str() + ", q " +
                         q.value.get_str());
        }
    }
}

inline void fintushel_stern(Check& c) {
    for (const auto& [name, b] : KnotTable::builtin().entries()) {
        const LaurentPoly d = alexander_burau(b);
        for (int n = 3; n <= 29; n += 2) {
            const std::string at = name + " N=" + std::to_string(n);
            const RelativeInvariant q = q_relative(d, n);
            if (q.degenerate) continue;
            const FsProduct fs = q_fintushel_stern(BigInt(1), d, n);
            c.expect(fs.sign_determined && fs.value == q.value, at + ": product differs from q_relative");
            c.expect(fs.value > 0, at + ": not positive");
        }
    }
    const LaurentPoly unknot = LaurentPoly::one();
    for (int n = 2; n <= 30; ++n)
        c.expect(q_fintushel_stern(BigInt(1), unknot, n).value == 1, "unknot N=" + std::to_string(n) + " != 1");
}

inline int sign_of_exponent(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

inline void orientation_signs(Check& c) {
    Rng rng(0x5157);
    for (int i = 0; i < 100; ++i) {
        const int n_odd = static_cast<int>(2 * rng.uniform(1, 15) + 1);
        const long w_sq = rng.uniform(-40, 40), v_sq = rng.uniform(-40, 40);
        const long k_w = w_sq + 2 * rng.uniform(-20, 20);
        const int b2p = static_cast<int>(rng.uniform(0, 21)), b1 = static_cast<int>(rng.uniform(0, 6));
        c.expect(sign_complex_compare(n_odd, w_sq, k_w) == 1 && sign_lift_compare(n_odd, v_sq) == 1 &&
                     sign_dual_compare(n_odd, w_sq) == 1 && sign_conjugate_bundle(n_odd, b2p, b1) == 1,
                 "odd N=" + std::to_string(n_odd) + " gave -1");
    }
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(2 * rng.uniform(1, 15));
        const long w_sq = rng.uniform(-40, 40), v_sq = rng.uniform(-40, 40);
        const long k_w = w_sq + 2 * rng.uniform(-20, 20);
        const int b1 = static_cast<int>(rng.uniform(0, 6));
        const int b2p = b1 + 2 * static_cast<int>(rng.uniform(0, 10)) + 1;
        const std::string at = "tuple " + std::to_string(i) + " N=" + std::to_string(n);
        c.expect(sign_complex_compare(n, w_sq, k_w) == sign_of_exponent((w_sq + k_w) / 2), at + ": complex");
        c.expect(sign_lift_compare(n, v_sq) == (n % 4 == 0 ? 1 : sign_of_exponent(v_sq)), at + ": lift");
        c.expect(sign_dual_compare(n, w_sq) == sign_of_exponent(w_sq), at + ": dual");
        c.expect(sign_conjugate_bundle(n, b2p, b1) == sign_of_exponent((b2p - b1 + 1) / 2), at + ": conjugate");
    }
}

/// Coefficient of s^m in exp(Q s^2 / 2) sum_k a_k exp(2 k F s), summed directly.
inline Rational hand_coefficient(const LaurentPoly& d, const Rational& q, const Rational& f, int m) {
    Rational total = 0;
    BigInt fact_i = 1;
    Rational half_q_pow = 1;
    for (int i = 0; 2 * i <= m; ++i) {
        if (i > 0) {
            fact_i *= i;
            half_q_pow *= q / 2;
        }
        const int j = m - 2 * i;
        BigInt fact_j = 1;
        for (int r = 2; r <= j; ++r) fact_j *= r;
        Rational inner = 0;
        for (int e = d.min_deg(); e <= d.max_deg(); ++e) {
            Rational base = Rational(2 * e) * f, p = 1;
            for (int r = 0; r < j; ++r) p *= base;
            inner += Rational(d.coeff(e)) * p;
        }
        total += half_q_pow / Rational(fact_i) * inner / Rational(fact_j);
    }
    return total;
}

inline void donaldson_series(Check& c) {
    constexpr int order = 20;
    for (const Rational q : {Rational(0), Rational(1), Rational(-3), make_rational(5, 2)}) {
        const PowerSeries s = donaldson_series_xk(LaurentPoly::one(), q, Rational(1), order);
        BigInt fact = 1;
        for (int m = 0; m <= order; ++m) {
            Rational expect = 0;
            if (m % 2 == 0) {
                if (m > 0) fact *= m / 2;
                Rational pw = 1;
                for (int r = 0; r < m / 2; ++r) pw *= q / 2;
                expect = pw / Rational(fact);
            }
            c.expect(s[static_cast<std::size_t>(m)] == expect, "unknot series s^" + std::to_string(m));
        }
    }
    Rng rng(0xD0A1);
    for (int i = 0; i < 50; ++i) {
        const PowerSeries a = rng.series(order), b = rng.series(order);
        c.expect(ps_exp(a + b) == ps_exp(a) * ps_exp(b), "exp group law, sample " + std::to_string(i));
    }
    for (const std::string name : {"3_1", "4_1", "5_2"}) {
        const LaurentPoly d = corpus_delta(name);
        for (const auto& [q, f] : {std::pair{Rational(0), Rational(1)}, std::pair{Rational(2), make_rational(1, 3)}}) {
            const PowerSeries s = donaldson_series_xk(d, q, f, order);
            for (long deg = 0; deg <= 2 * order; deg += 2) {
                BigInt fact = 1;
                for (long r = 2; r <= deg / 2; ++r) fact *= r;
                const Rational expect = hand_coefficient(d, q, f, static_cast<int>(deg / 2)) * Rational(fact);
                c.expect(extract_qk(s, deg) == expect, name + ": q_k at d=" + std::to_string(deg));
            }
        }
    }
}

/// Magnitudes below this are at the rounding level of (1/N) log q_N.
inline constexpr double kAsymptoticNoiseFloor = 1e-13;

inline void mahler(Check& c) {
    const double golden = (3.0 + std::sqrt(5.0)) / 2.0;
    const LaurentPoly fig8 = corpus_delta("4_1");
    const LaurentPoly trefoil = corpus_delta("3_1");
    const double r8 = mahler_measure_roots(fig8), i8 = mahler_measure_integral(fig8, 4096);
    c.expect(std::fabs(r8 - golden) <= 1e-8, "figure-eight roots route");
    c.expect(std::fabs(i8 - golden) <= 1e-8, "figure-eight integral route");
    const double r3 = mahler_measure_roots(trefoil), i3 = mahler_measure_integral(trefoil, 4096);
    c.expect(std::fabs(r3 - 1.0) <= 1e-8, "trefoil roots route");
    c.expect(std::fabs(i3 - 1.0) <= 1e-8, "trefoil integral route");

    const auto ns = odd_ladder(3, 199);
    const auto rows = asymptotic_table(fig8, ns);
    const AsymptoticRow& last = rows.back();
    c.expect(last.n == 199 && std::fabs(last.difference) <= 1e-3, "difference at N=199");
    double prev = INFINITY;
    for (const auto& r : rows) {
        if (r.n <= 21) continue;
        const double mag = std::fabs(r.difference);
        if (prev > kAsymptoticNoiseFloor) c.expect(mag < prev, "tail not decreasing at N=" + std::to_string(r.n));
        else c.expect(mag <= kAsymptoticNoiseFloor, "tail rose above noise floor at N=" + std::to_string(r.n));
        prev = mag;
    }
    std::ostringstream os;
    os.precision(12);
    os << "M(4_1)=" << r8 << " / " << i8 << ", diff(199)=" << last.difference;
    c.note(os.str());
}

inline void snf_suite(Check& c) {
    Rng rng(0x5AF);
    for (int i = 0; i < 500; ++i) {
        const auto rows = static_cast<std::size_t>(rng.uniform(1, 6));
        const auto cols = static_cast<std::size_t>(rng.uniform(1, 6));
        const IntMatrix a = rng.int_matrix(rows, cols, 9);
        const SmithForm s = smith_normal_form(a);
        const std::string at = "matrix " + std::to_string(i);
        c.expect(s.U * a * s.V == s.D, at + ": U A V != D");
        c.expect(abs(det_exact(s.U)) == 1 && abs(det_exact(s.V)) == 1, at + ": not unimodular");
        bool diag = true;
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t q = 0; q < cols; ++q)
                if (r != q && s.D(r, q) != 0) diag = false;
        c.expect(diag, at + ": D not diagonal");
        const auto& f = s.invariant_factors;
        for (std::size_t k = 0; k < f.size(); ++k) {
            c.expect(f[k] >= 0, at + ": negative factor");
            if (k + 1 < f.size()) {
                const bool divides = f[k] == 0 ? f[k + 1] == 0 : mpz_divisible_p(f[k + 1].get_mpz_t(), f[k].get_mpz_t());
                c.expect(divides, at + ": divisibility chain broken");
            }
        }
        if (rows == cols) {
            BigInt prod = 1;
            for (const auto& x : f) prod *= x;
            c.expect(abs(det_exact(a)) == prod, at + ": determinant not preserved");
        }
    }
}

}  // namespace detail

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

inline std::vector<Criterion> criteria() {
    return {
        {1, "Alexander polynomial: Burau = Fox, normalized, symmetric", 1.0, detail::alexander_cross_method},
        {2, "relative invariant: resultant = SNF, float within 1e-6, N<=30", 30.0, detail::three_routes},
        {3, "trefoil degenerate at N=6,12,18", 0.0, detail::degeneracy},
        {4, "K3 and blow-up bookkeeping", 0.0, detail::k3_bookkeeping},
        {5, "T^3 representation variety, N<=12", 60.0, detail::t3_variety},
        {6, "kernel count = Wirtinger count = q, N<=7", 120.0, detail::number_det},
        {7, "Fintushel-Stern product", 0.0, detail::fintushel_stern},
        {8, "orientation signs", 0.0, detail::orientation_signs},
        {9, "Donaldson series", 0.0, detail::donaldson_series},
        {10, "Mahler measure and asymptotics", 60.0, detail::mahler},
        {11, "Smith normal form on 500 random matrices", 0.0, detail::snf_suite},
    };
}

inline Outcome run(const Criterion& cr) {
    Outcome o;
    o.id = cr.id;
    o.title = cr.title;
    o.limit_seconds = cr.limit_seconds;
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        cr.body(c);
    } catch (const Error& e) {
        c.expect(false, std::string("uncaught ") + e.kind() + ": " + e.what());
    } catch (const std::exception& e) {
        c.expect(false, std::string("uncaught exception: ") + e.what());
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.limit_seconds > 0 && o.seconds >= o.limit_seconds)
        c.expect(false, "took " + std::to_string(o.seconds) + " s, limit " + std::to_string(o.limit_seconds) + " s");
    o.passed = c.ok();
    o.detail = c.ok() ? c.notes() : c.detail();
    return o;
}

inline std::string format(const Outcome& o) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (o.passed ? "PASS" : "FAIL") << "  C" << o.id << (o.id < 10 ? "  " : " ") << o.title << "  [" << o.seconds
       << " s]";
    if (!o.detail.empty()) os << "  " << o.detail;
    return os.str();
}

/// Runs every criterion, printing one line each. Returns true if all pass.
inline bool run_all(std::ostream& out) {
    bool all = true;
    for (const auto& cr : criteria()) {
        const Outcome o = run(cr);
        out << format(o) << std::endl;
        all = all && o.passed;
    }
    return all;
}

}  // namespace kinv::acceptance
