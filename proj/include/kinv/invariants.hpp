#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/exact_linalg.hpp"
#include "kinv/laurent_poly.hpp"

namespace kinv {

struct ManifoldTopology {
    std::string name;
    int b2_plus = 0;
    int b1 = 0;
    std::optional<int> euler;
    std::optional<int> signature;

    /// b2+ - b1 + 1, the factor multiplying N^2 - 1 in the dimension formula.
    int index_factor() const { return b2_plus - b1 + 1; }
};

/// Characteristic data of a U(N) bundle.
struct BundleData {
    int n = 2;
    std::vector<long> c1_pairings;
    std::optional<long> c2;
    long c1_sq = 0;
    std::optional<long> k_dot_w;
};

/// kappa = c2 - ((N-1)/(2N)) c1^2.
inline Rational kappa(int n, const BigInt& c2, const BigInt& c1_sq) {
    if (n < 2) fail("BadRank", "kappa needs N >= 2");
    return Rational(c2) - make_rational(BigInt(n - 1), BigInt(2 * n)) * Rational(c1_sq);
}

/// d = 4N kappa - (N^2 - 1)(b2+ - b1 + 1).
inline BigInt formal_dimension(int n, const Rational& kap, const ManifoldTopology& topo) {
    const Rational four_n_kappa = Rational(4 * n) * kap;
    if (four_n_kappa.get_den() != 1)
        fail("NonIntegralDimension", "4N kappa = " + four_n_kappa.get_str() + " is not an integer");
    return four_n_kappa.get_num() - BigInt(n * n - 1) * topo.index_factor();
}

/// The kappa giving a zero-dimensional moduli space, if an integral c2
/// achieves it: (N^2-1)(b2+ - b1 + 1) + 2(N-1) w.w must be divisible by 4N.
inline std::optional<Rational> dimension_zero_kappa(int n, const ManifoldTopology& topo, const BigInt& c1_sq) {
    if (n < 2) fail("BadRank", "dimension_zero_kappa needs N >= 2");
    const BigInt base = BigInt(n * n - 1) * topo.index_factor();
    const BigInt total = base + BigInt(2 * (n - 1)) * c1_sq;
    if (!mpz_divisible_ui_p(total.get_mpz_t(), static_cast<unsigned long>(4 * n))) return std::nullopt;
    return make_rational(base, BigInt(4 * n));
}

/// Some pairing of c1(w) with an integral class is coprime to N.
inline bool is_coprime(std::span<const long> c1_pairings, int n) {
    long g = 0;
    for (long p : c1_pairings) g = std::gcd(g, p);
    return std::gcd(g, static_cast<long>(n)) == 1;
}

struct RelativeInvariant {
    BigInt value;               // product for odd N, its magnitude for even N
    bool sign_determined = false;
    bool degenerate = false;
    int n = 2;
    AbelianGroup homology;      // cokernel of Delta(tau_v)
    BigInt signed_product;      // exact prod_k Delta(zeta^k), sign included
    std::complex<double> float_product;
    bool method_agreement = false;
};

namespace detail {

/// prod_{k=1}^{N-1} Delta(zeta^k) from a resultant of the shifted ordinary
/// polynomial P = t^(-m) Delta against 1 + t + ... + t^(N-1). The monomial
/// t^m contributes zeta^(m N(N-1)/2) = (-1)^(m(N-1)).
template <class ResultantFn>
BigInt product_via_resultant(const LaurentPoly& delta, int n, ResultantFn res) {
    const IntPoly p = delta.to_int_poly();
    BigInt r = res(geometric_sum(n), p);
    const long m = delta.min_deg();
    if ((std::labs(m) * (n - 1)) % 2 != 0) r = -r;
    return r;
}

}  // namespace detail

/// Route (a): Sylvester resultant.
inline BigInt alexander_product_resultant(const LaurentPoly& delta, int n) {
    return detail::product_via_resultant(delta, n, [](const IntPoly& f, const IntPoly& g) { return resultant(f, g); });
}

/// Route (a) by the Euclidean recurrence; used where N is large.
inline BigInt alexander_product_fast(const LaurentPoly& delta, int n) {
    return detail::product_via_resultant(delta, n,
                                         [](const IntPoly& f, const IntPoly& g) { return resultant_euclid(f, g); });
}

/// Route (c): floating-point product over the roots of unity.
inline std::complex<double> alexander_product_float(const LaurentPoly& delta, int n) {
    std::complex<double> acc = 1.0;
    for (int k = 1; k < n; ++k) acc *= delta.eval(std::polar(1.0, 2.0 * std::numbers::pi * k / n));
    return acc;
}

/// The relative invariant prod_{k=1}^{N-1} Delta(e^{2 pi i k / N}), computed
/// by resultant, by determinant/cokernel of Delta(tau_v), and in floating
/// point. The two exact routes must agree or CrossCheckMismatch is thrown.
inline RelativeInvariant q_relative(const LaurentPoly& delta, int n) {
    if (n < 2) fail("BadRank", "q_relative needs N >= 2");
    RelativeInvariant q;
    q.n = n;
    q.signed_product = alexander_product_resultant(delta, n);

    const IntMatrix m = poly_at_matrix(delta, companion_tau(n));
    const BigInt det = det_exact(m);
    q.homology = cokernel(m);
    q.float_product = alexander_product_float(delta, n);

    bool agree = det == q.signed_product;
    if (q.homology.is_finite()) agree = agree && *q.homology.order() == abs(det);
    else agree = agree && det == 0;
    if (!agree)
        fail("CrossCheckMismatch", "resultant route " + q.signed_product.get_str() + " vs determinant route " +
                                       det.get_str() + " (N=" + std::to_string(n) + ")");
    q.method_agreement = true;

    q.degenerate = q.signed_product == 0;
    q.sign_determined = n % 2 == 1;
    if (q.sign_determined && q.signed_product < 0)
        fail("InternalError", "odd-N product must be positive (conjugate pairs)");
    q.value = abs(q.signed_product);
    return q;
}

/// H_1 of the N-fold cyclic branched cover: coker Delta(tau_v).
inline AbelianGroup branched_cover_homology(const LaurentPoly& delta, int n) {
    return cokernel(poly_at_matrix(delta, companion_tau(n)));
}

struct FsProduct {
    BigInt value;
    bool sign_determined = true;
};

/// q^w(X_K) = q^w(X) * prod_k Delta(zeta^k). For even N only the magnitude
/// is known and the result carries sign_determined = false.
inline FsProduct q_fintushel_stern(const BigInt& q_x, const LaurentPoly& delta, int n) {
    if (q_x == 0) return {BigInt(0), n % 2 == 1};
    const RelativeInvariant rel = q_relative(delta, n);
    if (rel.degenerate) fail("DegenerateProduct", "Alexander product vanishes at N=" + std::to_string(n));
    if (n % 2 == 0) return {abs(q_x) * rel.value, false};
    return {q_x * rel.value, true};
}

/// q^w of the K3 surface for the bundle with c1 = (N+1)h, c2 = C(N+1,2) h^2,
/// h^2 = 2(N-1).
inline BigInt k3_invariant() { return BigInt(1); }

struct K3Bundle {
    BigInt c2;
    BigInt c1_sq;
    ManifoldTopology topology;
};

inline K3Bundle k3_bundle(int n) {
    const BigInt h_sq = 2 * (n - 1);
    const BigInt c1 = n + 1;                  // multiple of h
    const BigInt c2 = BigInt(n + 1) * n / 2;  // multiple of h^2
    ManifoldTopology k3{"K3", 3, 0, 24, -16};
    return {c2 * h_sq, c1 * c1 * h_sq, k3};
}

struct LiftIndex {
    Rational kappa;
    BigInt dim;
    long k_offset = 0;

    friend bool operator==(const LiftIndex&, const LiftIndex&) = default;
};

/// Moving the lift by k adds k to kappa and 4Nk to the index.
inline LiftIndex lift_shift(const LiftIndex& base, long k, int n) {
    return {base.kappa + Rational(k), base.dim + BigInt(4L * n) * k, base.k_offset + k};
}

namespace detail {
inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }
}  // namespace detail

/// Distinguished vs complex orientation on a Kahler surface.
inline int sign_complex_compare(int n, long w_sq, long k_dot_w) {
    if (n % 2 == 1) return 1;
    if ((w_sq + k_dot_w) % 2 != 0) fail("ParityViolation", "w.w + K.w must be even");
    return detail::parity_sign((w_sq + k_dot_w) / 2);
}

/// Orientations for w and w + Nv.
inline int sign_lift_compare(int n, long v_sq) {
    if (n % 2 == 1 || n % 4 == 0) return 1;
    return detail::parity_sign(v_sq);
}

/// The dualizing map M^w -> M^-w.
inline int sign_dual_compare(int n, long w_sq) {
    if (n % 2 == 1) return 1;
    return detail::parity_sign(w_sq);
}

/// q^w versus q^-w.
inline int sign_conjugate_bundle(int n, int b2_plus, int b1) {
    if (n % 2 == 1) return 1;
    const long e = b2_plus - b1 + 1;
    if (e % 2 != 0) fail("ParityViolation", "even N needs b2+ - b1 odd");
    return detail::parity_sign(e / 2);
}

}  // namespace kinv
