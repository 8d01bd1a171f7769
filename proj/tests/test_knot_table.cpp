#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "kinv/knot_table.hpp"
#include "test_util.hpp"

using namespace kinv;

TEST(KnotTable, BuiltinCorpus) {
    const KnotTable& t = KnotTable::builtin();
    EXPECT_EQ(t.entries().size(), 6u);
    EXPECT_EQ(t.at("4_1").letters(), (std::vector<int>{1, -2, 1, -2}));
    EXPECT_EQ(t.at("6_1").strands(), 4);
    EXPECT_EQ(t.at("unknot").strands(), 1);
    EXPECT_TRUE(t.at("unknot").letters().empty());
    std::vector<std::string> names;
    for (const auto& [name, b] : t.entries()) names.push_back(name);
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}

TEST(KnotTable, ParseCommentsAndWhitespace) {
    const KnotTable t = KnotTable::parse("# header\n\n  a : 1 1 1   # trefoil\n\tb: 1 -2 1 -2\n");
    EXPECT_EQ(t.entries().size(), 2u);
    EXPECT_EQ(t.at("a").letters(), (std::vector<int>{1, 1, 1}));
    EXPECT_TRUE(t.contains("b"));
    EXPECT_FALSE(t.contains("c"));
}

TEST(KnotTable, Errors) {
    EXPECT_EQ(kind_of([] { KnotTable::parse("a: 1 1 1\na: 1 1 1 1 1\n"); }), "DuplicateName");
    EXPECT_EQ(kind_of([] { KnotTable::parse("no colon here\n"); }), "SyntaxError");
    EXPECT_EQ(kind_of([] { KnotTable::parse(": 1 1 1\n"); }), "SyntaxError");
    EXPECT_EQ(kind_of([] { KnotTable::parse("link: 1 1\n"); }), "NotAKnot");
    EXPECT_EQ(kind_of([] { KnotTable::builtin().at("8_19"); }), "UnknownKnot");
    EXPECT_EQ(kind_of([] { KnotTable::load("/nonexistent/knots.txt"); }), "IOError");
}

TEST(KnotTable, ResolveNameOrLiteral) {
    const KnotTable& t = KnotTable::builtin();
    EXPECT_EQ(t.resolve("3_1").letters(), (std::vector<int>{1, 1, 1}));
    const BraidWord b = t.resolve("1 -2 1 -2");
    EXPECT_EQ(b.strands(), 3);
    EXPECT_EQ(b.letters(), t.at("4_1").letters());
    EXPECT_EQ(kind_of([&] { t.resolve("1 1"); }), "NotAKnot");
}

TEST(KnotTable, DataFileMatchesBuiltin) {
    const KnotTable f = KnotTable::load(KINV_DATA_DIR "/knots.txt");
    const KnotTable& t = KnotTable::builtin();
    ASSERT_EQ(f.entries().size(), t.entries().size());
    for (const auto& [name, b] : t.entries()) {
        EXPECT_EQ(f.at(name).strands(), b.strands()) << name;
        EXPECT_EQ(f.at(name).letters(), b.letters()) << name;
    }
}
