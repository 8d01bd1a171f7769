#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "kinv/bigint.hpp"
#include "kinv/laurent_poly.hpp"
#include "kinv/matrix.hpp"
#include "kinv/series.hpp"

namespace kinv {

/// Seeded generator for property checks. Same seed, same stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin() { return uniform(0, 1) == 1; }

    IntMatrix int_matrix(std::size_t rows, std::size_t cols, long bound) {
        IntMatrix m = int_zero(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(-bound, bound);
        return m;
    }

    Rational rational(long num_bound, long den_bound) {
        return make_rational(BigInt(uniform(-num_bound, num_bound)), BigInt(uniform(1, den_bound)));
    }

    /// Series with zero constant term and small rational coefficients.
    PowerSeries series(int order, long num_bound = 5, long den_bound = 4) {
        PowerSeries s(order);
        for (int k = 1; k <= order; ++k) s[static_cast<std::size_t>(k)] = rational(num_bound, den_bound);
        return s;
    }

    LaurentPoly laurent(int max_span, long bound) {
        const int lo = static_cast<int>(uniform(-max_span, max_span));
        std::vector<BigInt> c(static_cast<std::size_t>(uniform(0, max_span)) + 1);
        for (auto& x : c) x = uniform(-bound, bound);
        return LaurentPoly(lo, std::move(c));
    }

    /// Palindromic polynomial with Delta(1) = 1: the shape of an Alexander
    /// polynomial.
    LaurentPoly alexander_like(int half_span, long bound) {
        const auto h = static_cast<std::size_t>(half_span);
        std::vector<BigInt> c(2 * h + 1, BigInt(0));
        BigInt side = 0;
        for (std::size_t i = 0; i < h; ++i) {
            c[i] = c[2 * h - i] = uniform(-bound, bound);
            side += c[i];
        }
        c[h] = 1 - 2 * side;
        return LaurentPoly(-half_span, std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace kinv
