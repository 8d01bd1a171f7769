#include <gtest/gtest.h>

#include "kinv/knot_table.hpp"
#include "kinv/knots.hpp"
#include "kinv/random.hpp"
#include "test_util.hpp"

using namespace kinv;

namespace {

LaurentPoly corpus(const std::string& name) { return alexander_burau(KnotTable::builtin().at(name)); }

/// Random braid words on 2..4 strands whose closure is a knot.
std::vector<BraidWord> random_knot_braids(std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<BraidWord> out;
    while (static_cast<int>(out.size()) < count) {
        const int strands = static_cast<int>(rng.uniform(2, 4));
        std::vector<int> letters(static_cast<std::size_t>(rng.uniform(1, 9)));
        for (auto& l : letters) l = static_cast<int>(rng.uniform(1, strands - 1)) * (rng.coin() ? 1 : -1);
        try {
            out.emplace_back(strands, letters);
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace

TEST(ParseBraid, Examples) {
    const BraidWord t = parse_braid("1 1 1");
    EXPECT_EQ(t.strands(), 2);
    EXPECT_EQ(t.letters(), (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(parse_braid("1 -2 1 -2").strands(), 3);
    EXPECT_EQ(parse_braid("strands=1;").strands(), 1);
    EXPECT_EQ(parse_braid("strands=4; 1 2 3").strands(), 4);
    EXPECT_EQ(parse_braid("").strands(), 1);
}

TEST(ParseBraid, Errors) {
    EXPECT_EQ(kind_of([] { parse_braid("1 1"); }), "NotAKnot");
    EXPECT_EQ(kind_of([] { parse_braid("1 0 1"); }), "SyntaxError");
    EXPECT_EQ(kind_of([] { parse_braid("1 x"); }), "SyntaxError");
    EXPECT_EQ(kind_of([] { parse_braid("1.5"); }), "SyntaxError");
    EXPECT_EQ(kind_of([] { parse_braid("strands=2; 1 2"); }), "IndexOutOfRange");
    EXPECT_EQ(kind_of([] { parse_braid("strand=2; 1"); }), "SyntaxError");
    EXPECT_EQ(kind_of([] { parse_braid("strands=3;"); }), "NotAKnot");
}

TEST(BraidWord, StabilizationAndWrithe) {
    const BraidWord b = parse_braid("1 -2 1 -2");
    EXPECT_EQ(b.writhe(), 0);
    const BraidWord s = b.stabilized();
    EXPECT_EQ(s.strands(), 4);
    EXPECT_EQ(s.letters().back(), 3);
    EXPECT_EQ(parse_braid(s.to_string()), s);
}

TEST(Wirtinger, ArcAndRelationCounts) {
    const auto unknot = braid_closure_wirtinger(parse_braid("strands=1;"));
    EXPECT_EQ(unknot.n_generators, 1);
    EXPECT_TRUE(unknot.relations.empty());
    const auto trefoil = braid_closure_wirtinger(parse_braid("1 1 1"));
    EXPECT_EQ(trefoil.n_generators, 3);
    EXPECT_EQ(trefoil.relations.size(), 3u);
    const auto fig8 = braid_closure_wirtinger(parse_braid("1 -2 1 -2"));
    EXPECT_EQ(fig8.n_generators, 4);
    EXPECT_EQ(fig8.relations.size(), 4u);
}

TEST(Wirtinger, RelationsAreValidAndLongitudeNullHomologous) {
    for (const auto& [name, b] : KnotTable::builtin().entries()) {
        const auto w = braid_closure_wirtinger(b);
        for (const auto& r : w.relations) {
            for (int g : {r.result, r.under, r.over}) {
                EXPECT_GE(g, 0);
                EXPECT_LT(g, w.n_generators);
            }
            EXPECT_TRUE(r.sign == 1 || r.sign == -1);
        }
        EXPECT_EQ(w.longitude_degree(), 0) << name;
    }
}

TEST(Alexander, CorpusValues) {
    EXPECT_EQ(corpus("unknot"), LaurentPoly::one());
    EXPECT_EQ(corpus("3_1"), LaurentPoly(-1, {1, -1, 1}));
    EXPECT_EQ(corpus("4_1"), LaurentPoly(-1, {-1, 3, -1}));
    EXPECT_EQ(corpus("5_1"), LaurentPoly(-2, {1, -1, 1, -1, 1}));
    EXPECT_EQ(corpus("5_2"), LaurentPoly(-1, {2, -3, 2}));
    EXPECT_EQ(corpus("6_1"), LaurentPoly(-1, {-2, 5, -2}));
}

TEST(Alexander, BurauEqualsFoxOnCorpus) {
    for (const auto& [name, b] : KnotTable::builtin().entries())
        EXPECT_EQ(alexander_burau(b), alexander_fox(braid_closure_wirtinger(b))) << name;
}

TEST(Alexander, DeterminantAtMinusOne) {
    EXPECT_EQ(abs(corpus("3_1").eval(Rational(-1))), 3);
    EXPECT_EQ(abs(corpus("4_1").eval(Rational(-1))), 5);
    EXPECT_EQ(abs(corpus("5_1").eval(Rational(-1))), 5);
    EXPECT_EQ(abs(corpus("5_2").eval(Rational(-1))), 7);
    EXPECT_EQ(abs(corpus("6_1").eval(Rational(-1))), 9);
}

TEST(Alexander, MarkovStabilizationInvariance) {
    for (const auto& [name, b] : KnotTable::builtin().entries()) {
        const LaurentPoly d = alexander_burau(b);
        BraidWord s = b;
        for (int i = 0; i < 2; ++i) {
            s = s.stabilized();
            EXPECT_EQ(alexander_burau(s), d) << name;
            EXPECT_EQ(alexander_fox(braid_closure_wirtinger(s)), d) << name;
        }
        if (b.strands() > 1) {
            std::vector<int> l = b.letters();
            l.push_back(-b.strands());
            EXPECT_EQ(alexander_burau(BraidWord(b.strands() + 1, l)), d) << name << " negative stabilization";
        }
    }
}

TEST(Alexander, ConjugationInvariance) {
    for (const auto& b : random_knot_braids(7, 40)) {
        std::vector<int> rot = b.letters();
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        EXPECT_EQ(alexander_burau(BraidWord(b.strands(), rot)), alexander_burau(b)) << b.to_string();
    }
}

TEST(Alexander, BurauEqualsFoxOnRandomBraids) {
    for (const auto& b : random_knot_braids(11, 150)) {
        const LaurentPoly d = alexander_burau(b);
        EXPECT_EQ(alexander_fox(braid_closure_wirtinger(b)), d) << b.to_string();
        EXPECT_EQ(d.at_one(), 1);
        EXPECT_EQ(d.involute(), d);
    }
}

TEST(Alexander, MirrorImageHasSamePolynomial) {
    for (const auto& b : random_knot_braids(13, 40)) {
        std::vector<int> m = b.letters();
        for (auto& l : m) l = -l;
        EXPECT_EQ(alexander_burau(BraidWord(b.strands(), m)), alexander_burau(b));
    }
}
