#pragma once

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/error.hpp"
#include "kinv/matrix.hpp"

namespace kinv {

class LaurentPoly;

/// Ordinary integer polynomial, coefficients in ascending degree, trimmed so
/// the leading coefficient is nonzero. The zero polynomial has no coefficients
/// and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long x : coeffs) c_.emplace_back(x);
        trim();
    }

    static IntPoly monomial(const BigInt& a, std::size_t deg) {
        std::vector<BigInt> c(deg + 1, BigInt(0));
        c[deg] = a;
        return IntPoly(std::move(c));
    }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
    const BigInt& leading() const {
        if (c_.empty()) fail("ZeroPolynomial", "leading coefficient of zero polynomial");
        return c_.back();
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a) {
        std::vector<BigInt> c = a.c_;
        for (auto& x : c) x = -x;
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(c));
    }

    /// Exact quotient a / b over Z[t]. Throws InexactDivision if b does not
    /// divide a.
    friend IntPoly div_exact(const IntPoly& a, const IntPoly& b) {
        if (b.is_zero()) fail("DivisionByZero", "polynomial division by zero");
        if (a.is_zero()) return {};
        if (a.degree() < b.degree()) fail("InexactDivision", "polynomial division is not exact");
        std::vector<BigInt> r = a.c_;
        std::vector<BigInt> q(a.c_.size() - b.c_.size() + 1, BigInt(0));
        const BigInt& lb = b.c_.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            const BigInt& top = r[k + b.c_.size() - 1];
            if (top == 0) continue;
            if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
                fail("InexactDivision", "polynomial division is not exact");
            BigInt f;
            mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
            q[k] = f;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
        }
        for (const auto& x : r)
            if (x != 0) fail("InexactDivision", "polynomial division is not exact");
        return IntPoly(std::move(q));
    }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;
};

/// Integer Laurent polynomial sum_i coeffs[i] * t^(min_deg + i).
///
/// Always canonically trimmed: the first and last stored coefficients are
/// nonzero, and the zero polynomial has min_deg 0 and no coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int min_deg, std::vector<BigInt> coeffs) : min_deg_(min_deg), c_(std::move(coeffs)) {
        normalize();
    }
    LaurentPoly(int min_deg, std::initializer_list<long> coeffs) : min_deg_(min_deg) {
        for (long x : coeffs) c_.emplace_back(x);
        normalize();
    }

    static LaurentPoly constant(const BigInt& a) { return LaurentPoly(0, std::vector<BigInt>{a}); }
    static LaurentPoly monomial(const BigInt& a, int deg) { return LaurentPoly(deg, std::vector<BigInt>{a}); }
    static LaurentPoly t() { return monomial(BigInt(1), 1); }
    static LaurentPoly one() { return constant(BigInt(1)); }
    static LaurentPoly from_int_poly(const IntPoly& p, int shift = 0) { return LaurentPoly(shift, p.coeffs()); }

    bool is_zero() const noexcept { return c_.empty(); }
    int min_deg() const noexcept { return min_deg_; }
    int max_deg() const noexcept { return min_deg_ + static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return c_; }
    BigInt coeff(int k) const {
        if (k < min_deg_ || k > max_deg()) return BigInt(0);
        return c_[static_cast<std::size_t>(k - min_deg_)];
    }
    bool is_unit() const { return c_.size() == 1 && abs(c_[0]) == 1; }

    /// The ordinary polynomial t^(-min_deg) * p. `*this == from_int_poly(p, min_deg())`.
    IntPoly to_int_poly() const { return IntPoly(c_); }

    LaurentPoly shifted(int k) const {
        if (is_zero()) return {};
        return LaurentPoly(min_deg_ + k, c_);
    }

    /// Substitution t -> t^-1.
    LaurentPoly involute() const {
        if (is_zero()) return {};
        std::vector<BigInt> r(c_.rbegin(), c_.rend());
        return LaurentPoly(-max_deg(), std::move(r));
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int lo = std::min(a.min_deg_, b.min_deg_);
        const int hi = std::max(a.max_deg(), b.max_deg());
        std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i + static_cast<std::size_t>(a.min_deg_ - lo)] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i + static_cast<std::size_t>(b.min_deg_ - lo)] += b.c_[i];
        return LaurentPoly(lo, std::move(c));
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return LaurentPoly(a.min_deg_ + b.min_deg_, std::move(c));
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    /// Exact quotient in Z[t, t^-1]. Throws InexactDivision otherwise.
    friend LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) fail("DivisionByZero", "Laurent division by zero");
        if (a.is_zero()) return {};
        IntPoly q = div_exact(a.to_int_poly(), b.to_int_poly());
        return from_int_poly(q, a.min_deg_ - b.min_deg_);
    }

    /// Value at a nonzero rational.
    Rational eval(const Rational& x) const {
        if (x == 0) fail("ZeroArgument", "Laurent polynomial evaluated at zero");
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc * rational_pow(x, min_deg_);
    }

    std::complex<double> eval(std::complex<double> z) const {
        if (z == std::complex<double>(0.0, 0.0)) fail("ZeroArgument", "Laurent polynomial evaluated at zero");
        std::complex<double> acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i].get_d();
        return acc * std::pow(z, min_deg_);
    }

    /// Value at t = 1 (sum of coefficients).
    BigInt at_one() const {
        BigInt s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    std::string to_string() const;
    static LaurentPoly parse(std::string_view text);

private:
    static Rational rational_pow(const Rational& x, int e) {
        Rational r = 1;
        Rational b = e < 0 ? Rational(1 / x) : x;
        unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
        while (n) {
            if (n & 1U) r *= b;
            n >>= 1;
            if (n) b *= b;
        }
        return r;
    }

    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            min_deg_ = 0;
            return;
        }
        while (c_.back() == 0) c_.pop_back();
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            min_deg_ += static_cast<int>(lead);
        }
    }

    int min_deg_ = 0;
    std::vector<BigInt> c_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// Terms in ascending degree: "-1*t^-1 + 3 - 1*t^1".
inline std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const BigInt& a = c_[i];
        if (a == 0) continue;
        const int deg = min_deg_ + static_cast<int>(i);
        if (first) {
            os << (deg == 0 ? a.get_str() : a.get_str() + "*t^" + std::to_string(deg));
        } else {
            os << (a < 0 ? " - " : " + ");
            const BigInt m = abs(a);
            os << (deg == 0 ? m.get_str() : m.get_str() + "*t^" + std::to_string(deg));
        }
        first = false;
    }
    return os.str();
}

/// Accepts the output of `to_string` and looser hand-written forms such as
/// "t - 1 + t^-1", "2t^2-3", "-t".
inline LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) fail("SyntaxError", "empty polynomial text");

    std::map<int, BigInt> terms;
    std::size_t i = 0;
    auto read_int = [&](std::string& out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!terms.empty()) {
            fail("SyntaxError", "expected '+' or '-' in polynomial text: " + s);
        }
        std::string digits;
        read_int(digits);
        BigInt coef = digits.empty() ? BigInt(1) : BigInt(digits);
        int deg = 0;
        bool has_t = false;
        if (i < s.size() && s[i] == '*') {
            if (digits.empty()) fail("SyntaxError", "dangling '*' in polynomial text: " + s);
            ++i;
            if (i >= s.size() || s[i] != 't') fail("SyntaxError", "expected 't' after '*': " + s);
        }
        if (i < s.size() && s[i] == 't') {
            has_t = true;
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int esign = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                    esign = s[i] == '-' ? -1 : 1;
                    ++i;
                }
                std::string ed;
                read_int(ed);
                if (ed.empty()) fail("SyntaxError", "missing exponent: " + s);
                deg = esign * std::stoi(ed);
            }
        }
        if (digits.empty() && !has_t) fail("SyntaxError", "empty term in polynomial text: " + s);
        terms[deg] += sign * coef;
    }
    const int lo = terms.begin()->first;
    const int hi = terms.rbegin()->first;
    std::vector<BigInt> c(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    for (const auto& [d, a] : terms) c[static_cast<std::size_t>(d - lo)] = a;
    return LaurentPoly(lo, std::move(c));
}

/// Normalizes a raw Alexander polynomial to the unique unit multiple
/// eps * t^m * p with q(t) = q(t^-1) and q(1) = 1.
inline LaurentPoly symmetrize_alexander(const LaurentPoly& p) {
    const auto& c = p.coeffs();
    const std::size_t n = c.size();
    if (n % 2 == 0) fail("NotSymmetrizable", "no unit multiple of " + p.to_string() + " is palindromic");
    for (std::size_t i = 0; i < n / 2; ++i)
        if (c[i] != c[n - 1 - i])
            fail("NotSymmetrizable", "no unit multiple of " + p.to_string() + " is palindromic");
    LaurentPoly q(-static_cast<int>(n / 2), c);
    const BigInt v = q.at_one();
    if (v == -1) q = -q;
    else if (v != 1) fail("NotAKnotPolynomial", "value at t=1 is " + v.get_str() + ", expected +-1");
    return q;
}

/// Phi_N by exact division of t^N - 1 by the cyclotomic polynomials of the
/// proper divisors of N.
inline IntPoly cyclotomic(int n) {
    if (n < 1) fail("BadOrder", "cyclotomic order must be positive");
    std::vector<IntPoly> phi(static_cast<std::size_t>(n) + 1);
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        IntPoly num = IntPoly::monomial(BigInt(1), static_cast<std::size_t>(d)) - IntPoly{1};
        for (int e = 1; e < d; ++e)
            if (d % e == 0) num = div_exact(num, phi[static_cast<std::size_t>(e)]);
        phi[static_cast<std::size_t>(d)] = num;
    }
    return phi[static_cast<std::size_t>(n)];
}

/// 1 + t + ... + t^(n-1); its roots are the nontrivial n-th roots of unity.
inline IntPoly geometric_sum(int n) {
    return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

/// Sylvester matrix with the deg(g) shifted rows of f first, then deg(f) rows of g.
inline IntMatrix sylvester_matrix(const IntPoly& f, const IntPoly& g) {
    const std::size_t m = static_cast<std::size_t>(f.degree());
    const std::size_t n = static_cast<std::size_t>(g.degree());
    IntMatrix s = int_zero(m + n, m + n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s(r, r + k) = f.coeffs()[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s(n + r, r + k) = g.coeffs()[n - k];
    return s;
}

/// Res(f, g) = det Sylvester(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a).
inline BigInt resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) fail("ZeroPolynomial", "resultant of the zero polynomial");
    if (f.degree() == 0 && g.degree() == 0) return BigInt(1);
    return det_exact(sylvester_matrix(f, g));
}

/// Same value as `resultant`, by the Euclidean recurrence over Q. Quadratic
/// rather than cubic in the degree, so it is the route used for large N.
inline BigInt resultant_euclid(const IntPoly& f0, const IntPoly& g0) {
    if (f0.is_zero() || g0.is_zero()) fail("ZeroPolynomial", "resultant of the zero polynomial");
    using QPoly = std::vector<Rational>;
    auto to_q = [](const IntPoly& p) {
        QPoly q;
        for (const auto& x : p.coeffs()) q.emplace_back(x);
        return q;
    };
    auto trim = [](QPoly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    QPoly f = to_q(f0), g = to_q(g0);
    Rational acc = 1;
    // Res(f, g) with deg g = 0 is lc(g)^deg f.
    while (true) {
        const long df = static_cast<long>(f.size()) - 1;
        const long dg = static_cast<long>(g.size()) - 1;
        if (dg == 0) {
            Rational p = 1;
            for (long i = 0; i < df; ++i) p *= g[0];
            acc *= p;
            break;
        }
        if (df == 0) {
            Rational p = 1;
            for (long i = 0; i < dg; ++i) p *= f[0];
            acc *= p;
            break;
        }
        if (df < dg) {
            // Res(f, g) = (-1)^(df dg) Res(g, f)
            if ((df * dg) % 2 != 0) acc = -acc;
            std::swap(f, g);
            continue;
        }
        QPoly r = f;
        for (long k = df - dg; k >= 0; --k) {
            const Rational q = r[static_cast<std::size_t>(k + dg)] / g.back();
            if (q == 0) continue;
            for (long j = 0; j <= dg; ++j) r[static_cast<std::size_t>(k + j)] -= q * g[static_cast<std::size_t>(j)];
        }
        r.resize(static_cast<std::size_t>(dg));
        trim(r);
        if (r.empty()) return BigInt(0);
        // Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
        const long dr = static_cast<long>(r.size()) - 1;
        if ((df * dg) % 2 != 0) acc = -acc;
        Rational p = 1;
        for (long i = 0; i < df - dr; ++i) p *= g.back();
        acc *= p;
        f = std::move(g);
        g = std::move(r);
    }
    if (acc.get_den() != 1) fail("InternalError", "Euclidean resultant is not integral");
    return acc.get_num();
}

}  // namespace kinv
