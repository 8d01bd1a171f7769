#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kinv/error.hpp"
#include "kinv/laurent_poly.hpp"
#include "kinv/matrix.hpp"

namespace kinv {

/// A braid word whose closure is a knot. Letter i > 0 is sigma_i, i < 0 is
/// sigma_|i|^-1.
class BraidWord {
public:
    BraidWord() = default;

    /// Throws IndexOutOfRange or NotAKnot.
    BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1) fail("IndexOutOfRange", "braid needs at least one strand");
        for (int l : letters_) {
            if (l == 0) fail("SyntaxError", "zero braid letter");
            if (std::abs(l) > strands_ - 1)
                fail("IndexOutOfRange", "letter " + std::to_string(l) + " out of range for " +
                                            std::to_string(strands_) + " strands");
        }
        if (components() != 1)
            fail("NotAKnot", "braid closure has " + std::to_string(components()) + " components");
    }

    int strands() const noexcept { return strands_; }
    const std::vector<int>& letters() const noexcept { return letters_; }

    /// perm[p] = bottom position reached by the strand starting at top position p.
    std::vector<int> permutation() const {
        std::vector<int> at(static_cast<std::size_t>(strands_));  // at[pos] = starting strand
        std::iota(at.begin(), at.end(), 0);
        for (int l : letters_) {
            const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
            std::swap(at[i], at[i + 1]);
        }
        std::vector<int> perm(at.size());
        for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
        return perm;
    }

    int components() const {
        const auto perm = permutation();
        std::vector<bool> seen(perm.size(), false);
        int count = 0;
        for (std::size_t s = 0; s < perm.size(); ++s) {
            if (seen[s]) continue;
            ++count;
            for (std::size_t p = s; !seen[p]; p = static_cast<std::size_t>(perm[p])) seen[p] = true;
        }
        return count;
    }

    int writhe() const {
        int w = 0;
        for (int l : letters_) w += l > 0 ? 1 : -1;
        return w;
    }

    /// Markov stabilization: one more strand and a positive sigma_{n}.
    BraidWord stabilized() const {
        std::vector<int> l = letters_;
        l.push_back(strands_);
        return BraidWord(strands_ + 1, std::move(l));
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "strands=" << strands_ << ";";
        for (int l : letters_) os << ' ' << l;
        return os.str();
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

/// Parses "1 -2 1 -2" or "strands=3; 1 -2 1 -2". Without an explicit strand
/// count the braid uses max|letter| + 1 strands.
inline BraidWord parse_braid(std::string_view text) {
    std::string body(text);
    int strands = -1;
    if (const auto semi = body.find(';'); semi != std::string::npos) {
        std::string head = body.substr(0, semi);
        body = body.substr(semi + 1);
        head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   head.end());
        constexpr std::string_view key = "strands=";
        if (head.rfind(key, 0) != 0) fail("SyntaxError", "expected 'strands=<n>;' prefix, got '" + head + "'");
        try {
            std::size_t used = 0;
            strands = std::stoi(head.substr(key.size()), &used);
            if (used != head.size() - key.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            fail("SyntaxError", "bad strand count '" + head + "'");
        }
    }
    std::istringstream is(body);
    std::vector<int> letters;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            fail("SyntaxError", "non-integer braid token '" + tok + "'");
        }
        if (used != tok.size()) fail("SyntaxError", "non-integer braid token '" + tok + "'");
        if (v == 0) fail("SyntaxError", "zero braid letter");
        letters.push_back(v);
    }
    if (strands < 0) {
        int m = 0;
        for (int l : letters) m = std::max(m, std::abs(l));
        strands = m + 1;
    }
    return BraidWord(strands, std::move(letters));
}

/// One conjugation relation m_result = m_over^s m_under m_over^-s.
struct WirtingerRelation {
    int result;
    int under;
    int over;
    int sign;  // +1 or -1

    friend bool operator==(const WirtingerRelation&, const WirtingerRelation&) = default;
};

struct LongitudeLetter {
    int generator;
    int exponent;
};

struct WirtingerPresentation {
    int n_generators = 1;
    std::vector<WirtingerRelation> relations;
    int base_meridian = 0;
    std::vector<LongitudeLetter> longitude_word;

    /// Total exponent of the longitude word; zero for a correct framing.
    int longitude_degree() const {
        int d = 0;
        for (const auto& l : longitude_word) d += l.exponent;
        return d;
    }
};

/// Wirtinger presentation of the closed-braid diagram: one generator per arc,
/// one relation per crossing.
///
/// Strands run downward. For sigma_i the strand at position i passes over
/// to i+1 and the strand at i+1 passes under to i; sigma_i^-1 is the mirror
/// crossing. The outgoing under-arc is over^s * under * over^-s with s the
/// letter's sign, which makes sigma_i sigma_i^-1 restore the original arc.
inline WirtingerPresentation braid_closure_wirtinger(const BraidWord& b) {
    const std::size_t n = static_cast<std::size_t>(b.strands());
    int next_label = static_cast<int>(n);
    std::vector<int> arc(n);  // current arc at each position
    std::iota(arc.begin(), arc.end(), 0);

    struct Crossing {
        int over, under_in, under_out, sign;
        std::size_t under_pos_in;  // position of the under strand before the crossing
    };
    std::vector<Crossing> crossings;
    crossings.reserve(b.letters().size());
    for (int l : b.letters()) {
        const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
        const int sign = l > 0 ? 1 : -1;
        const std::size_t over_pos = sign > 0 ? i : i + 1;
        const std::size_t under_pos = sign > 0 ? i + 1 : i;
        const int over = arc[over_pos];
        const int under_in = arc[under_pos];
        const int under_out = next_label++;
        crossings.push_back({over, under_in, under_out, sign, under_pos});
        arc[under_pos] = under_out;
        std::swap(arc[i], arc[i + 1]);
    }

    // Closure identifies the bottom arc at each position with the top arc there.
    std::vector<int> parent(static_cast<std::size_t>(next_label));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (std::size_t p = 0; p < n; ++p) {
        const int a = find(arc[p]);
        const int c = find(static_cast<int>(p));
        if (a != c) parent[static_cast<std::size_t>(std::max(a, c))] = std::min(a, c);
    }

    // Dense relabeling in order of first appearance, starting from the top arc
    // at position 0 so that generator 0 is the base meridian.
    std::vector<int> dense(static_cast<std::size_t>(next_label), -1);
    int g = 0;
    auto label = [&](int raw) {
        const int root = find(raw);
        int& d = dense[static_cast<std::size_t>(root)];
        if (d < 0) d = g++;
        return d;
    };
    label(0);
    for (int x = 0; x < next_label; ++x) label(x);

    WirtingerPresentation w;
    w.n_generators = g;
    w.base_meridian = 0;
    for (const auto& c : crossings) w.relations.push_back({label(c.under_out), label(c.under_in), label(c.over), c.sign});

    // Longitude: walk the knot once from top position 0, recording the over-arc
    // at every under-passage, then correct the framing by m_base^-writhe.
    const auto perm = b.permutation();
    std::size_t pos = 0;
    do {
        std::size_t cur = pos;
        std::size_t k = 0;
        for (int l : b.letters()) {
            const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
            if (cur == i || cur == i + 1) {
                const auto& c = crossings[k];
                if (c.under_pos_in == cur) w.longitude_word.push_back({label(c.over), c.sign});
                cur = cur == i ? i + 1 : i;
            }
            ++k;
        }
        pos = static_cast<std::size_t>(perm[pos]);
    } while (pos != 0);
    if (b.writhe() != 0) w.longitude_word.push_back({w.base_meridian, -b.writhe()});
    return w;
}

namespace detail {

inline LaurentPoly laurent_det(const Matrix<LaurentPoly>& m) {
    return bareiss_determinant(m, LaurentPoly{}, LaurentPoly::one(),
                               [](const LaurentPoly& a, const LaurentPoly& b) { return div_exact(a, b); });
}

/// Reduced Burau matrix of sigma_i^(+-1) on `strands` strands.
inline Matrix<LaurentPoly> reduced_burau_generator(int strands, int letter) {
    const std::size_t n = static_cast<std::size_t>(strands - 1);
    Matrix<LaurentPoly> m = Matrix<LaurentPoly>::identity(n, LaurentPoly{}, LaurentPoly::one());
    const int i = std::abs(letter);  // 1-based
    const bool inverse = letter < 0;
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly tinv = LaurentPoly::monomial(BigInt(1), -1);
    // 3x3 block on rows/cols i-2, i-1, i (0-based), clipped to [0, n).
    const LaurentPoly block[3][3] = {
        {LaurentPoly::one(), inverse ? LaurentPoly::one() : t, LaurentPoly{}},
        {LaurentPoly{}, inverse ? -tinv : -t, LaurentPoly{}},
        {LaurentPoly{}, inverse ? tinv : LaurentPoly::one(), LaurentPoly::one()},
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            const int rr = i - 2 + r;
            const int cc = i - 2 + c;
            if (rr < 0 || cc < 0 || rr >= static_cast<int>(n) || cc >= static_cast<int>(n)) continue;
            m(static_cast<std::size_t>(rr), static_cast<std::size_t>(cc)) = block[r][c];
        }
    return m;
}

}  // namespace detail

/// Symmetrized Alexander polynomial from det(I - Burau(b)) (1 - t) / (1 - t^n).
inline LaurentPoly alexander_burau(const BraidWord& b) {
    const std::size_t n = static_cast<std::size_t>(b.strands() - 1);
    Matrix<LaurentPoly> acc = Matrix<LaurentPoly>::identity(n, LaurentPoly{}, LaurentPoly::one());
    for (int l : b.letters()) acc = acc * detail::reduced_burau_generator(b.strands(), l);
    const auto eye = Matrix<LaurentPoly>::identity(n, LaurentPoly{}, LaurentPoly::one());
    const LaurentPoly d = detail::laurent_det(eye - acc);
    const LaurentPoly denom = LaurentPoly::from_int_poly(geometric_sum(b.strands()));
    LaurentPoly raw;
    try {
        raw = div_exact(d, denom);
    } catch (const Error&) {
        fail("InternalError", "Burau determinant not divisible by 1 + t + ... + t^(n-1)");
    }
    return symmetrize_alexander(raw);
}

/// Alexander matrix from Fox derivatives of the Wirtinger relations with
/// every meridian sent to t. Rows are relations, columns generators.
inline Matrix<LaurentPoly> fox_matrix(const WirtingerPresentation& w) {
    Matrix<LaurentPoly> m(w.relations.size(), static_cast<std::size_t>(w.n_generators), LaurentPoly{});
    const LaurentPoly one = LaurentPoly::one();
    for (std::size_t r = 0; r < w.relations.size(); ++r) {
        const auto& rel = w.relations[r];
        // relation word: m_over^s m_under m_over^-s m_result^-1
        const LaurentPoly ts = LaurentPoly::monomial(BigInt(1), rel.sign);
        m(r, static_cast<std::size_t>(rel.under)) += ts;
        m(r, static_cast<std::size_t>(rel.over)) += one - ts;
        m(r, static_cast<std::size_t>(rel.result)) -= one;
    }
    return m;
}

/// Deletes the last relation and the base-meridian column, takes the
/// determinant, and symmetrizes.
inline LaurentPoly alexander_fox(const WirtingerPresentation& w) {
    if (w.relations.empty()) {
        if (w.n_generators != 1) fail("DegenerateMatrix", "presentation without relations has several generators");
        return LaurentPoly::one();
    }
    if (static_cast<int>(w.relations.size()) != w.n_generators)
        fail("DegenerateMatrix", "Wirtinger presentation is not square");
    const auto m = fox_matrix(w).minor_matrix(w.relations.size() - 1, static_cast<std::size_t>(w.base_meridian));
    const LaurentPoly d = detail::laurent_det(m);
    if (d.is_zero()) fail("DegenerateMatrix", "Alexander minor vanishes");
    return symmetrize_alexander(d);
}

}  // namespace kinv
