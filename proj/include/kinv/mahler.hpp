#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/invariants.hpp"
#include "kinv/laurent_poly.hpp"

namespace kinv {

struct RootSet {
    std::vector<std::complex<double>> roots;
    double residual_bound = 0.0;  // max |p(root)| over the reported roots
};

namespace detail {

inline std::vector<double> to_doubles(const IntPoly& p) {
    std::vector<double> a;
    for (const auto& c : p.coeffs()) a.push_back(c.get_d());
    return a;
}

/// p(z) and p'(z) by Horner.
inline std::pair<std::complex<double>, std::complex<double>> horner2(std::span<const double> a,
                                                                      std::complex<double> z) {
    std::complex<double> p = 0.0, dp = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + a[i];
    }
    return {p, dp};
}

/// sum |a_i| |z|^i, the natural size of p(z) for rounding purposes.
inline double eval_scale(std::span<const double> a, std::complex<double> z) {
    const double r = std::abs(z);
    double s = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) s = s * r + std::fabs(a[i]);
    return s;
}

}  // namespace detail

/// All complex roots with multiplicity by Aberth-Ehrlich iteration, started
/// from a fixed circle of radius 1 + max|a_i / a_n|.
inline RootSet poly_roots(const IntPoly& p, double tol = 1e-10) {
    const int n = p.degree();
    if (n < 1) fail("BadDegree", "poly_roots needs degree >= 1");
    const std::vector<double> a = detail::to_doubles(p);
    const std::size_t deg = static_cast<std::size_t>(n);

    double bound = 0.0;
    for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::fabs(a[i] / a[deg]));
    const double radius = 1.0 + bound;
    std::vector<std::complex<double>> z(deg);
    for (std::size_t k = 0; k < deg; ++k)
        z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / n + 0.4);

    constexpr int kMaxIter = 2000;
    constexpr double kEps = 4.0 * std::numeric_limits<double>::epsilon();
    bool converged = false;
    for (int it = 0; it < kMaxIter && !converged; ++it) {
        converged = true;
        for (std::size_t k = 0; k < deg; ++k) {
            const auto [pv, dpv] = detail::horner2(a, z[k]);
            if (pv == std::complex<double>(0.0, 0.0)) continue;
            std::complex<double> sum = 0.0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k) sum += 1.0 / (z[k] - z[j]);
            std::complex<double> step;
            if (dpv == std::complex<double>(0.0, 0.0)) {
                step = std::complex<double>(kEps, kEps) * std::max(1.0, std::abs(z[k]));
            } else {
                const std::complex<double> ratio = pv / dpv;
                step = ratio / (1.0 - ratio * sum);
            }
            z[k] -= step;
            if (std::abs(step) > kEps * std::max(1.0, std::abs(z[k]))) converged = false;
        }
    }

    RootSet out;
    for (const auto& r : z) {
        const double res = std::abs(detail::horner2(a, r).first);
        if (!(res <= tol * detail::eval_scale(a, r)))
            fail("NonConvergence", "Aberth iteration did not converge");
        out.residual_bound = std::max(out.residual_bound, res);
    }
    out.roots = std::move(z);
    return out;
}

/// |a| prod max(1, |lambda|) over the roots of the ordinary polynomial
/// t^(-min_deg) Delta; the Laurent shift does not change the measure.
inline double mahler_measure_roots(const LaurentPoly& delta) {
    if (delta.is_zero()) fail("ZeroPolynomial", "Mahler measure of zero");
    const IntPoly p = delta.to_int_poly();
    double m = std::fabs(p.leading().get_d());
    if (p.degree() == 0) return m;
    for (const auto& r : poly_roots(p).roots) m *= std::max(1.0, std::abs(r));
    return m;
}

/// Radius of the integration contour used by default. Off the unit circle so
/// that zeros of Delta on the circle do not spoil the quadrature.
inline constexpr double kMahlerContourRadius = 1.0 + 1.0 / 32.0;

/// exp of (1/n) sum_k log|P(r e^{2 pi i (k + theta)/n})| - Z(r) log r, where
/// Z(r) counts zeros inside |z| < r (read off as the winding number of the
/// same samples). By Jensen's formula this equals the Mahler measure when P
/// has no zeros with 1 < |z| < r. With radius = 1 it is the plain trapezoid
/// rule for the integral of log|Delta| over the unit circle.
inline double mahler_measure_integral(const LaurentPoly& delta, int n_samples,
                                      double radius = kMahlerContourRadius) {
    if (delta.is_zero()) fail("ZeroPolynomial", "Mahler measure of zero");
    if (n_samples < 8) fail("BadSamples", "need at least 8 samples");
    if (!(radius >= 1.0)) fail("BadRadius", "contour radius must be >= 1");
    const IntPoly p = delta.to_int_poly();
    const std::vector<double> a = detail::to_doubles(p);
    const double n = static_cast<double>(n_samples);

    constexpr int kRetries = 8;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        const double theta = attempt * 0.5 / kRetries;  // fraction of one sample spacing
        double log_sum = 0.0;
        double winding = 0.0;
        std::complex<double> first, prev;
        bool singular = false;
        for (int k = 0; k < n_samples; ++k) {
            const std::complex<double> z = std::polar(radius, 2.0 * std::numbers::pi * (k + theta) / n);
            const std::complex<double> v = detail::horner2(a, z).first;
            if (std::abs(v) <= std::numeric_limits<double>::min() * detail::eval_scale(a, z) * 1e10) {
                singular = true;
                break;
            }
            log_sum += std::log(std::abs(v));
            if (k == 0) first = v;
            else winding += std::arg(v / prev);
            prev = v;
        }
        if (singular) continue;
        winding += std::arg(first / prev);
        const double zeros = std::round(winding / (2.0 * std::numbers::pi));
        return std::exp(log_sum / n - zeros * std::log(radius));
    }
    fail("SingularSample", "integrand vanished at a sample point on every offset");
}

struct AsymptoticRow {
    int n = 0;
    BigInt q;                 // |prod_k Delta(zeta^k)|
    double log_q_over_n = 0;  // (1/N) log q_N
    double log_alpha = 0;     // log of the Mahler measure
    double difference = 0;    // (1/N) log q_N - log alpha
    bool degenerate = false;  // q_N = 0, excluded from the limit
    bool conjectural = false; // even N
};

/// (1/N) log q_N against log of the Mahler measure, one row per N.
inline std::vector<AsymptoticRow> asymptotic_table(const LaurentPoly& delta, std::span<const int> n_values) {
    const double log_alpha = std::log(mahler_measure_roots(delta));
    std::vector<AsymptoticRow> rows;
    for (int n : n_values) {
        if (n < 2) fail("BadRank", "asymptotic_table needs N >= 2");
        AsymptoticRow r;
        r.n = n;
        r.q = abs(alexander_product_fast(delta, n));
        r.log_alpha = log_alpha;
        r.conjectural = n % 2 == 0;
        if (r.q == 0) {
            r.degenerate = true;
            r.log_q_over_n = -std::numeric_limits<double>::infinity();
            r.difference = std::numeric_limits<double>::quiet_NaN();
        } else {
            r.log_q_over_n = log_abs(r.q) / n;
            r.difference = r.log_q_over_n - log_alpha;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

inline std::vector<int> odd_ladder(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo | 1; n <= hi; n += 2) v.push_back(n);
    return v;
}

}  // namespace kinv
