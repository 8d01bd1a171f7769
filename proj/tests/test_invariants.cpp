#include <gtest/gtest.h>

#include <cmath>

#include "kinv/invariants.hpp"
#include "kinv/knot_table.hpp"
#include "kinv/random.hpp"
#include "test_util.hpp"

using namespace kinv;

namespace {

LaurentPoly corpus(const std::string& name) { return alexander_burau(KnotTable::builtin().at(name)); }

BigInt lucas(int n) {
    BigInt a = 2, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return a;
}

/// |prod_k (2 cos(2 pi k/N) - 1)| depends only on N mod 6.
long trefoil_closed_form(int n) {
    switch (n % 6) {
        case 0: return 0;
        case 3: return 4;
        case 2:
        case 4: return 3;
        default: return 1;
    }
}

}  // namespace

TEST(Kappa, Formula) {
    EXPECT_EQ(kappa(2, 1, 0), 1);
    EXPECT_EQ(kappa(3, 0, 3), -1);
    EXPECT_EQ(kappa(4, 10, 8), make_rational(7, 1));
    EXPECT_EQ(kappa(2, 0, -1), make_rational(1, 4));
    EXPECT_EQ(kind_of([] { kappa(1, 0, 0); }), "BadRank");
}

TEST(FormalDimension, IntegralityAndValue) {
    const ManifoldTopology k3{"K3", 3, 0, 24, -16};
    EXPECT_EQ(formal_dimension(4, make_rational(15, 4), k3), 0);
    EXPECT_EQ(formal_dimension(2, Rational(3), k3), 24 - 12);
    EXPECT_EQ(kind_of([&] { formal_dimension(3, make_rational(1, 5), k3); }), "NonIntegralDimension");
}

TEST(DimensionZeroKappa, DivisibilityCondition) {
    const ManifoldTopology k3{"K3", 3, 0, 24, -16};
    for (int n = 2; n <= 10; ++n) {
        const BigInt c1_sq = BigInt(2) * (n + 1) * (n + 1) * (n - 1);
        const auto k = dimension_zero_kappa(n, k3, c1_sq);
        ASSERT_TRUE(k.has_value()) << n;
        EXPECT_EQ(*k, Rational(n) - make_rational(1, n));
        EXPECT_EQ(formal_dimension(n, *k, k3), 0);
    }
    // N=3, w^2=2: 8 * 4 + 4 * 2 = 40 is not divisible by 12
    EXPECT_FALSE(dimension_zero_kappa(3, k3, 2).has_value());
    EXPECT_TRUE(dimension_zero_kappa(3, k3, 1).has_value());
}

TEST(Coprime, GcdCriterion) {
    const std::vector<long> a{4, 6}, b{3, 9}, c{0, 0};
    EXPECT_FALSE(is_coprime(a, 2));
    EXPECT_TRUE(is_coprime(a, 3));
    EXPECT_FALSE(is_coprime(b, 15));
    EXPECT_TRUE(is_coprime(b, 2));
    EXPECT_FALSE(is_coprime(c, 2));
}

TEST(QRelative, SpotValues) {
    EXPECT_EQ(q_relative(corpus("3_1"), 2).value, 3);
    EXPECT_EQ(q_relative(corpus("4_1"), 2).value, 5);
    const RelativeInvariant f3 = q_relative(corpus("4_1"), 3);
    EXPECT_EQ(f3.value, 16);
    EXPECT_TRUE(f3.sign_determined);
    EXPECT_EQ(f3.homology.to_string(), "Z/4 + Z/4");
    const RelativeInvariant t2 = q_relative(corpus("3_1"), 2);
    EXPECT_FALSE(t2.sign_determined);
    EXPECT_FALSE(t2.degenerate);
}

TEST(QRelative, FigureEightIsLucasMinusTwo) {
    const LaurentPoly d = corpus("4_1");
    for (int n = 2; n <= 40; ++n) EXPECT_EQ(q_relative(d, n).value, lucas(2 * n) - 2) << n;
}

TEST(QRelative, TrefoilPeriodSix) {
    const LaurentPoly d = corpus("3_1");
    for (int n = 2; n <= 36; ++n) {
        const RelativeInvariant q = q_relative(d, n);
        EXPECT_EQ(q.value, trefoil_closed_form(n)) << n;
        EXPECT_EQ(q.degenerate, n % 6 == 0);
    }
}

TEST(QRelative, UnknotIsOne) {
    for (int n = 2; n <= 20; ++n) {
        const RelativeInvariant q = q_relative(LaurentPoly::one(), n);
        EXPECT_EQ(q.value, 1);
        EXPECT_EQ(q.signed_product, 1);
        EXPECT_TRUE(q.homology.invariant_factors.empty());
    }
}

TEST(QRelative, FloatRouteAgrees) {
    for (const auto& [name, b] : KnotTable::builtin().entries()) {
        const LaurentPoly d = alexander_burau(b);
        for (int n = 2; n <= 30; ++n) {
            const RelativeInvariant q = q_relative(d, n);
            const double exact = q.signed_product.get_d();
            EXPECT_NEAR(q.float_product.real(), exact, 1e-6 * std::max(1.0, std::fabs(exact))) << name << " " << n;
            EXPECT_NEAR(q.float_product.imag(), 0.0, 1e-6 * std::max(1.0, std::fabs(exact)));
        }
    }
}

TEST(QRelative, MultiplicativeUnderConnectedSum) {
    Rng rng(808);
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly a = rng.alexander_like(static_cast<int>(rng.uniform(1, 3)), 4);
        const LaurentPoly b = rng.alexander_like(static_cast<int>(rng.uniform(1, 3)), 4);
        const int n = static_cast<int>(rng.uniform(2, 12));
        EXPECT_EQ(q_relative(a * b, n).signed_product,
                  BigInt(q_relative(a, n).signed_product * q_relative(b, n).signed_product))
            << a << " | " << b << " N=" << n;
    }
}

TEST(QRelative, RoutesAgreeOnRandomAlexanderPolynomials) {
    Rng rng(809);
    for (int i = 0; i < 60; ++i) {
        const LaurentPoly d = rng.alexander_like(static_cast<int>(rng.uniform(1, 4)), 6);
        for (int n : {2, 3, 5, 8, 13}) {
            const RelativeInvariant q = q_relative(d, n);  // throws on disagreement
            EXPECT_EQ(alexander_product_fast(d, n), q.signed_product);
            EXPECT_EQ(BigInt(abs(det_exact(poly_at_matrix(d, companion_tau(n))))), q.value);
        }
    }
}

TEST(QRelative, OddNProductIsPositive) {
    Rng rng(810);
    for (int i = 0; i < 60; ++i) {
        const LaurentPoly d = rng.alexander_like(static_cast<int>(rng.uniform(1, 4)), 6);
        for (int n = 3; n <= 15; n += 2) EXPECT_GE(q_relative(d, n).signed_product, 0);
    }
}

TEST(BranchedCover, DeterminantAndDegeneracy) {
    EXPECT_EQ(branched_cover_homology(corpus("3_1"), 2).to_string(), "Z/3");
    EXPECT_EQ(branched_cover_homology(corpus("6_1"), 2).to_string(), "Z/9");
    for (int n : {6, 12, 18}) EXPECT_GE(branched_cover_homology(corpus("3_1"), n).free_rank, 1);
    // 5_1: Delta = Phi_10, so zeros at primitive 10th roots
    EXPECT_EQ(branched_cover_homology(corpus("5_1"), 10).free_rank, 4);
}

TEST(FintushelStern, Product) {
    const LaurentPoly d = corpus("4_1");
    const FsProduct odd = q_fintushel_stern(BigInt(-2), d, 3);
    EXPECT_TRUE(odd.sign_determined);
    EXPECT_EQ(odd.value, -32);
    const FsProduct even = q_fintushel_stern(BigInt(-2), d, 2);
    EXPECT_FALSE(even.sign_determined);
    EXPECT_EQ(even.value, 10);
    EXPECT_EQ(q_fintushel_stern(BigInt(0), corpus("3_1"), 6).value, 0);
    EXPECT_EQ(kind_of([&] { q_fintushel_stern(BigInt(1), corpus("3_1"), 6); }), "DegenerateProduct");
    for (int n = 2; n <= 12; ++n) EXPECT_EQ(q_fintushel_stern(BigInt(1), LaurentPoly::one(), n).value, 1);
}

TEST(K3, BundleData) {
    for (int n = 2; n <= 10; ++n) {
        const K3Bundle b = k3_bundle(n);
        EXPECT_EQ(b.c2, BigInt(n) * (n * n - 1));
        EXPECT_EQ(b.c1_sq, BigInt(2) * (n + 1) * (n + 1) * (n - 1));
        const Rational k = kappa(n, b.c2, b.c1_sq);
        EXPECT_EQ(k, Rational(n) - make_rational(1, n));
        EXPECT_EQ(formal_dimension(n, k, b.topology), 0);
        EXPECT_EQ(*b.topology.euler, 24);
        EXPECT_EQ(*b.topology.signature, -16);
    }
    EXPECT_EQ(k3_invariant(), 1);
}

TEST(LiftShift, Ladder) {
    const ManifoldTopology k3{"K3", 3, 0, 24, -16};
    const int n = 5;
    const Rational k0 = kappa(n, k3_bundle(n).c2, k3_bundle(n).c1_sq);
    const LiftIndex base{k0, formal_dimension(n, k0, k3), 0};
    for (long k = -3; k <= 3; ++k) {
        const LiftIndex l = lift_shift(base, k, n);
        EXPECT_EQ(l.dim, formal_dimension(n, l.kappa, k3));
        EXPECT_EQ(l.dim - base.dim, BigInt(4 * n * k));
        EXPECT_EQ(lift_shift(l, -k, n), base);
    }
}

TEST(Signs, OddNAlwaysPositive) {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(2 * rng.uniform(1, 20) + 1);
        const long a = rng.uniform(-50, 50), b = rng.uniform(-50, 50);
        EXPECT_EQ(sign_complex_compare(n, a, a + 2 * b), 1);
        EXPECT_EQ(sign_lift_compare(n, a), 1);
        EXPECT_EQ(sign_dual_compare(n, a), 1);
        EXPECT_EQ(sign_conjugate_bundle(n, static_cast<int>(rng.uniform(0, 9)), static_cast<int>(rng.uniform(0, 9))), 1);
    }
}

TEST(Signs, EvenNClosedForms) {
    EXPECT_EQ(sign_complex_compare(2, 1, 1), -1);  // (1 + 1)/2 = 1
    EXPECT_EQ(sign_complex_compare(4, 2, 2), 1);
    EXPECT_EQ(sign_complex_compare(2, -3, 1), -1);
    EXPECT_EQ(sign_lift_compare(2, 1), -1);
    EXPECT_EQ(sign_lift_compare(6, -3), -1);
    EXPECT_EQ(sign_lift_compare(4, 1), 1);
    EXPECT_EQ(sign_lift_compare(8, 3), 1);
    EXPECT_EQ(sign_dual_compare(2, 3), -1);
    EXPECT_EQ(sign_dual_compare(2, -4), 1);
    EXPECT_EQ(sign_conjugate_bundle(2, 3, 0), 1);   // (3+1)/2 = 2
    EXPECT_EQ(sign_conjugate_bundle(2, 1, 0), -1);  // 1
    EXPECT_EQ(sign_conjugate_bundle(4, 5, 2), 1);   // 2
}

TEST(Signs, ParityViolations) {
    EXPECT_EQ(kind_of([] { sign_complex_compare(2, 1, 0); }), "ParityViolation");
    EXPECT_EQ(kind_of([] { sign_conjugate_bundle(2, 2, 0); }), "ParityViolation");
    EXPECT_EQ(kind_of([] { sign_conjugate_bundle(3, 2, 0); }), "none");
}
