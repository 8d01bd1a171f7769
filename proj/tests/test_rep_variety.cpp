#include <gtest/gtest.h>

#include <set>

#include "kinv/invariants.hpp"
#include "kinv/knot_table.hpp"
#include "kinv/random.hpp"
#include "kinv/rep_variety.hpp"
#include "test_util.hpp"

using namespace kinv;

namespace {

const BraidWord& corpus(const std::string& name) { return KnotTable::builtin().at(name); }

/// Points h in (1/D Z / Z)^(N-1) with M h integral, counted by enumeration.
long brute_kernel_count(const IntMatrix& m, long denom) {
    const std::size_t r = m.rows();
    std::vector<long> c(r, 0);
    long count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
            BigInt s = 0;
            for (std::size_t j = 0; j < r; ++j) s += m(i, j) * c[j];
            ok = mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(denom)) != 0;
        }
        if (ok) ++count;
        std::size_t i = 0;
        while (i < r && ++c[i] == denom) c[i++] = 0;
        if (i == r) break;
    }
    return count;
}

/// Solutions of the N=2 Wirtinger system h_k = -h_i + 2 h_j (mod 1) with the
/// base meridian at 0, each h in (1/D) Z / Z, by enumeration.
long brute_wirtinger_count_n2(const WirtingerPresentation& w, long denom) {
    const auto g = static_cast<std::size_t>(w.n_generators);
    std::vector<long> h(g, 0);
    long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& rel : w.relations) {
            const long lhs = h[static_cast<std::size_t>(rel.result)];
            const long rhs = -h[static_cast<std::size_t>(rel.under)] + 2 * h[static_cast<std::size_t>(rel.over)];
            if (((lhs - rhs) % denom + denom) % denom != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        std::size_t i = 0;
        while (i < g) {
            if (static_cast<int>(i) == w.base_meridian) {
                ++i;
                continue;
            }
            if (++h[i] < denom) break;
            h[i++] = 0;
        }
        if (i == g) break;
    }
    return count;
}

std::vector<BraidWord> random_knot_braids(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<BraidWord> out;
    while (static_cast<int>(out.size()) < count) {
        const int strands = static_cast<int>(rng.uniform(2, 4));
        std::vector<int> letters(static_cast<std::size_t>(rng.uniform(1, 8)));
        for (auto& l : letters) l = static_cast<int>(rng.uniform(1, strands - 1)) * (rng.coin() ? 1 : -1);
        try {
            out.emplace_back(strands, letters);
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace

TEST(ClockShift, TwoByTwo) {
    const ClockShift cs = clock_shift(2);
    const auto& f = cs.field();
    EXPECT_EQ(cs.shift(0, 1), CycNumber(f, Rational(-1)));
    EXPECT_EQ(cs.shift(1, 0), CycNumber(f, Rational(1)));
    EXPECT_EQ(cs.zeta(), CycNumber(f, Rational(-1)));
    // rho(x) is i diag(1, -1)
    EXPECT_EQ(cs.clock(0, 0) * cs.clock(0, 0), CycNumber(f, Rational(-1)));
    EXPECT_EQ(cs.clock(1, 1), -cs.clock(0, 0));
    EXPECT_EQ(group_commutator(cs.clock, cs.shift), cyc_identity(f, 2).scaled(CycNumber(f, Rational(-1))));
}

TEST(ClockShift, DeterminantsAndCommutatorUpToTwenty) {
    for (int n = 2; n <= 20; ++n) {
        const ClockShift cs = clock_shift(n);
        const auto& f = cs.field();
        const CycNumber one(f, Rational(1));
        EXPECT_EQ(cyc_det(cs.clock), one) << n;
        EXPECT_EQ(cyc_det(cs.shift), one) << n;
        EXPECT_EQ(group_commutator(cs.clock, cs.shift), cyc_identity(f, static_cast<std::size_t>(n)).scaled(cs.zeta()))
            << n;
        EXPECT_EQ(cs.shift(0, static_cast<std::size_t>(n - 1)), CycNumber(f, Rational(n % 2 == 0 ? -1 : 1)));
    }
}

TEST(ClockShift, CentralizerIsScalars) {
    for (int n = 2; n <= 8; ++n) {
        const ClockShift cs = clock_shift(n);
        EXPECT_EQ(centralizer_dimension({cs.clock, cs.shift}), 1u) << n;
        EXPECT_EQ(centralizer_dimension({cs.clock}), static_cast<std::size_t>(n)) << n;
    }
}

TEST(T3, PointCount) {
    for (int n = 2; n <= 12; ++n) EXPECT_EQ(verify_t3_points(n), n);
}

TEST(ChernSimons, Ladder) {
    const CsLadder l = chern_simons_ladder(3);
    EXPECT_EQ(l.values, (std::vector<Rational>{0, make_rational(2, 3), make_rational(1, 3)}));
    for (int n = 2; n <= 12; ++n) {
        const CsLadder m = chern_simons_ladder(n);
        EXPECT_EQ(m.d_loop, 4 * n);
        EXPECT_EQ(m.kappa_loop, 1);
        for (int k = 0; k + 1 < n; ++k) {
            // consecutive values differ by -1/N mod 1
            const Rational step = TorusElement::frac(m.values[static_cast<std::size_t>(k + 1)] -
                                                     m.values[static_cast<std::size_t>(k)]);
            EXPECT_EQ(step, make_rational(n - 1, n));
        }
    }
}

TEST(KernelSolutions, Examples) {
    const LaurentPoly trefoil = alexander_burau(corpus("3_1"));
    const auto t = kernel_torus_solutions(trefoil, 2, BigInt(100));
    std::set<Rational> got;
    for (const auto& h : t) got.insert(h.coords.at(0));
    EXPECT_EQ(got, (std::set<Rational>{0, make_rational(1, 3), make_rational(2, 3)}));

    const auto u = kernel_torus_solutions(LaurentPoly::one(), 5, BigInt(10));
    ASSERT_EQ(u.size(), 1u);
    EXPECT_TRUE(u[0].is_zero());

    const auto f = kernel_torus_solutions(alexander_burau(corpus("4_1")), 3, BigInt(100));
    EXPECT_EQ(f.size(), 16u);
    for (const auto& h : f) {
        // Z/4 + Z/4: every element has order dividing 4
        for (const auto& x : h.coords) EXPECT_EQ(TorusElement::frac(x * 4), 0);
    }
}

TEST(KernelSolutions, Errors) {
    const LaurentPoly trefoil = alexander_burau(corpus("3_1"));
    EXPECT_EQ(kind_of([&] { kernel_torus_solutions(trefoil, 6, BigInt(100)); }), "Degenerate");
    EXPECT_EQ(kind_of([&] { kernel_torus_solutions(alexander_burau(corpus("4_1")), 5, BigInt(100)); }),
              "CapExceeded");
}

TEST(KernelSolutions, DistinctAndMatchBruteForce) {
    for (const std::string name : {"3_1", "4_1", "5_2", "6_1"}) {
        const LaurentPoly d = alexander_burau(corpus(name));
        for (int n = 2; n <= 4; ++n) {
            const RelativeInvariant q = q_relative(d, n);
            if (q.degenerate) continue;
            const auto sols = kernel_torus_solutions(d, n, BigInt(100000));
            std::set<std::vector<Rational>> uniq;
            for (const auto& h : sols) uniq.insert(h.coords);
            EXPECT_EQ(uniq.size(), sols.size());
            const long brute = brute_kernel_count(poly_at_matrix(d, companion_tau(n)), q.value.get_si());
            EXPECT_EQ(static_cast<long>(sols.size()), brute) << name << " N=" << n;
        }
    }
}

TEST(WirtingerCount, Examples) {
    EXPECT_EQ(wirtinger_torus_count(braid_closure_wirtinger(corpus("unknot")), 4), 1);
    EXPECT_EQ(wirtinger_torus_count(braid_closure_wirtinger(corpus("3_1")), 2), 3);
    EXPECT_EQ(wirtinger_torus_count(braid_closure_wirtinger(corpus("4_1")), 2), 5);
    EXPECT_EQ(kind_of([] { wirtinger_torus_count(braid_closure_wirtinger(corpus("3_1")), 6); }), "Degenerate");
    EXPECT_EQ(wirtinger_torus_group(braid_closure_wirtinger(corpus("4_1")), 3).to_string(), "Z/4 + Z/4");
}

TEST(WirtingerCount, RankTwoBruteForce) {
    for (const std::string name : {"3_1", "4_1", "5_2", "5_1"}) {
        const auto w = braid_closure_wirtinger(corpus(name));
        const BigInt q = q_relative(alexander_burau(corpus(name)), 2).value;
        EXPECT_EQ(brute_wirtinger_count_n2(w, q.get_si()), q.get_si()) << name;
        EXPECT_EQ(wirtinger_torus_count(w, 2), q) << name;
    }
}

TEST(WirtingerCount, ThreeWayAgreementOnRandomBraids) {
    for (const auto& b : random_knot_braids(99, 30)) {
        const LaurentPoly d = alexander_burau(b);
        const auto w = braid_closure_wirtinger(b);
        for (int n = 2; n <= 5; ++n) {
            const RelativeInvariant q = q_relative(d, n);
            if (q.degenerate) {
                EXPECT_EQ(kind_of([&] { wirtinger_torus_count(w, n); }), "Degenerate") << b.to_string();
                continue;
            }
            EXPECT_EQ(wirtinger_torus_count(w, n), q.value) << b.to_string() << " N=" << n;
            EXPECT_EQ(wirtinger_torus_group(w, n), q.homology) << b.to_string() << " N=" << n;
        }
    }
}
