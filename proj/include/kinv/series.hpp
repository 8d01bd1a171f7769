#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/laurent_poly.hpp"

namespace kinv {

/// Power series in s truncated after s^order, exact rational coefficients.
class PowerSeries {
public:
    explicit PowerSeries(int order = 20) : c_(static_cast<std::size_t>(check_order(order)) + 1, Rational(0)) {}
    PowerSeries(int order, std::vector<Rational> coeffs) : PowerSeries(order) {
        for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
    }

    static PowerSeries constant(int order, const Rational& a) {
        PowerSeries p(order);
        p.c_[0] = a;
        return p;
    }
    /// The series a * s^k.
    static PowerSeries monomial(int order, const Rational& a, int k) {
        PowerSeries p(order);
        if (k <= order) p.c_[static_cast<std::size_t>(k)] = a;
        return p;
    }

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }
    const Rational& operator[](std::size_t k) const { return c_.at(k); }
    Rational& operator[](std::size_t k) { return c_.at(k); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        a.require_order(b);
        PowerSeries r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a) {
        PowerSeries r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.require_order(b);
        PowerSeries r(a.order());
        const std::size_t n = r.c_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    PowerSeries scaled(const Rational& k) const {
        PowerSeries r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }

private:
    static int check_order(int order) {
        if (order < 0) fail("BadOrder", "truncation order must be nonnegative");
        return order;
    }
    void require_order(const PowerSeries& b) const {
        if (order() != b.order()) fail("OrderMismatch", "power series with different truncation orders");
    }

    std::vector<Rational> c_;
};

/// exp(a) for a with zero constant term, via e' = a' e:
/// n e_n = sum_{k=1}^{n} k a_k e_{n-k}.
inline PowerSeries ps_exp(const PowerSeries& a) {
    if (a[0] != 0) fail("NonzeroConstantTerm", "exp needs a zero constant term");
    const int order = a.order();
    PowerSeries e(order);
    e[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) {
            const Rational& ak = a[static_cast<std::size_t>(k)];
            if (ak != 0) acc += Rational(k) * ak * e[static_cast<std::size_t>(n - k)];
        }
        e[static_cast<std::size_t>(n)] = acc / n;
    }
    return e;
}

/// exp(s^2 Q/2) * sum_k a_k exp(2 k s F): the Donaldson series of the
/// knot-surgered manifold along the ray s h, with Q = Q(h) and F = F(h).
inline PowerSeries donaldson_series_xk(const LaurentPoly& delta, const Rational& q_h, const Rational& f_h, int order) {
    const PowerSeries gauss = ps_exp(PowerSeries::monomial(order, q_h / 2, 2));
    PowerSeries sum(order);
    const auto& c = delta.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const long k = delta.min_deg() + static_cast<long>(i);
        const PowerSeries lin = PowerSeries::monomial(order, Rational(2 * k) * f_h, 1);
        sum = sum + ps_exp(lin).scaled(Rational(c[i]));
    }
    return gauss * sum;
}

/// a = 2^(2 + (7 chi + 11 sigma)/4) * SW.
inline Rational witten_coefficient(long euler, long signature, const BigInt& sw) {
    const long num = 7 * euler + 11 * signature;
    if (num % 4 != 0) fail("FractionalExponent", "7 chi + 11 sigma = " + std::to_string(num) + " is not divisible by 4");
    const long e = 2 + num / 4;
    BigInt p2 = BigInt(1) << static_cast<mp_bitcnt_t>(e < 0 ? -e : e);
    return e >= 0 ? Rational(sw * p2) : make_rational(sw, p2);
}

/// q_k with q_k / (d/2)! the coefficient of s^(d/2).
inline Rational extract_qk(const PowerSeries& series, long d) {
    if (d < 0 || d % 2 != 0) fail("BadDegree", "d must be a nonnegative even integer");
    const long half = d / 2;
    if (half > series.order()) fail("OrderExceeded", "d/2 exceeds the truncation order");
    BigInt fact = 1;
    for (long i = 2; i <= half; ++i) fact *= i;
    return series[static_cast<std::size_t>(half)] * Rational(fact);
}

}  // namespace kinv
