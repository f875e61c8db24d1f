#include <random>
#include <string>

#include <gtest/gtest.h>

#include <dsmatch/enumerate.hpp>
#include <dsmatch/oracle.hpp>
#include <dsmatch/syntax.hpp>

#include "language_oracle.hpp"

using namespace dsmatch;
using namespace dsmatch::oracle;

TEST(Nullable, Examples) {
    EXPECT_TRUE(nullable(Regex::star(Regex::empty())));
    EXPECT_FALSE(nullable(parse("aa*")));
    EXPECT_FALSE(nullable(Regex::empty()));
    EXPECT_TRUE(nullable(Regex::epsilon()));
    EXPECT_TRUE(nullable(parse("a*+b")));
    EXPECT_FALSE(nullable(parse("a*b")));
}

TEST(Derivative, Examples) {
    EXPECT_EQ(derivative(parse("a"), 'a'), Regex::epsilon());
    EXPECT_EQ(derivative(parse("a"), 'b'), Regex::empty());
    EXPECT_EQ(derivative(parse("a*"), 'a'), parse("a*"));
    EXPECT_EQ(derivative(parse("b+c"), 'c'), Regex::epsilon());
    EXPECT_EQ(derivative(parse("ab"), 'a'), parse("b"));
    EXPECT_EQ(derivative(parse("a*b"), 'b'), Regex::epsilon());
    EXPECT_EQ(derivative(parse("a*"), 'a', Simplify::no), Regex::concat(Regex::epsilon(), parse("a*")));
}

TEST(OracleMatch, Examples) {
    EXPECT_TRUE(oracle_match(parse("a*"), "aa"));
    EXPECT_FALSE(oracle_match(Regex::empty(), ""));
    EXPECT_TRUE(oracle_match(parse("(b+c)a"), "ca"));
    EXPECT_TRUE(oracle_match(parse("a*a*"), "aaa"));
    EXPECT_FALSE(oracle_match(parse("#*"), "a"));
}

// The derivative oracle against direct language construction, exhaustively.
TEST(OracleMatch, AgreesWithSetSemantics) {
    const auto words = enumerate_words("ab", 4);
    for (const Regex& r : enumerate_regexes("ab", 5)) {
        const sets::Language lang = sets::language_upto(r, 4);
        for (const Word& w : words) {
            ASSERT_EQ(oracle_match(r, w), lang.contains(w)) << render(r) << " on \"" << w << "\"";
        }
    }
}

TEST(OracleMatch, LanguageEquation) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 3000; ++i) {
        const Regex r = random_regex(rng, "ab", 10);
        const Word w = random_word(rng, "ab", 6);
        for (char c : std::string("ab")) {
            ASSERT_EQ(oracle_match(r, c + w), oracle_match(derivative(r, c), w)) << render(r);
        }
    }
}

TEST(OracleMatch, SimplificationIsSound) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 2000; ++i) {
        const Regex r = random_regex(rng, "ab", 9);
        const Word w = random_word(rng, "ab", 5);
        ASSERT_EQ(oracle_match(r, w, Simplify::yes), oracle_match(r, w, Simplify::no)) << render(r) << " " << w;
        ASSERT_EQ(oracle_match(derivative(r, 'a', Simplify::yes), w), oracle_match(derivative(r, 'a', Simplify::no), w));
    }
}

TEST(OracleMatch, NullableIsEmptyWordMembership) {
    for (const Regex& r : enumerate_regexes("ab", 5)) ASSERT_EQ(nullable(r), oracle_match(r, "")) << render(r);
}

TEST(SetSemantics, SanityOnKnownLanguages) {
    EXPECT_EQ(sets::language_upto(parse("a*"), 3), (sets::Language{"", "a", "aa", "aaa"}));
    EXPECT_EQ(sets::language_upto(parse("(a+b)c"), 3), (sets::Language{"ac", "bc"}));
    EXPECT_TRUE(sets::language_upto(parse("@*a@"), 3).empty());
}
