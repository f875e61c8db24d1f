#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <dsmatch/enumerate.hpp>
#include <dsmatch/regex.hpp>
#include <dsmatch/syntax.hpp>

using namespace dsmatch;

namespace {

Regex a() { return Regex::atom('a'); }
Regex b() { return Regex::atom('b'); }
Regex c() { return Regex::atom('c'); }

std::size_t error_position(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    ADD_FAILURE() << "no parse error for \"" << text << "\"";
    return 0;
}

}  // namespace

TEST(Parse, UnionThenConcat) {
    EXPECT_EQ(parse("(b+c)a"), Regex::concat(Regex::alt(b(), c()), a()));
}

TEST(Parse, EpsilonAndEmpty) {
    EXPECT_EQ(parse("#"), Regex::epsilon());
    EXPECT_EQ(parse("@"), Regex::empty());
}

TEST(Parse, StarBindsTighterThanConcat) {
    EXPECT_EQ(parse("a*a*"), Regex::concat(Regex::star(a()), Regex::star(a())));
}

TEST(Parse, ConcatAndUnionAreLeftAssociative) {
    EXPECT_EQ(parse("abc"), Regex::concat(Regex::concat(a(), b()), c()));
    EXPECT_EQ(parse("a+b+c"), Regex::alt(Regex::alt(a(), b()), c()));
    EXPECT_EQ(parse("ab+c"), Regex::alt(Regex::concat(a(), b()), c()));
}

TEST(Parse, RepeatedStar) {
    EXPECT_EQ(parse("a**"), Regex::star(Regex::star(a())));
    EXPECT_EQ(parse("(#)*"), Regex::star(Regex::epsilon()));
}

TEST(Parse, ErrorsCarryPosition) {
    EXPECT_EQ(error_position("(ab"), 0u);      // unbalanced '('
    EXPECT_EQ(error_position("ab)"), 2u);      // unbalanced ')'
    EXPECT_EQ(error_position("*a"), 0u);       // dangling star
    EXPECT_EQ(error_position("a+*"), 2u);
    EXPECT_EQ(error_position("a b"), 1u);      // whitespace is illegal
    EXPECT_EQ(error_position("a$"), 1u);
    EXPECT_EQ(error_position("a+"), 2u);       // missing operand
    EXPECT_EQ(error_position("+a"), 0u);
    EXPECT_EQ(error_position("()"), 1u);
    EXPECT_EQ(error_position(""), 0u);
}

TEST(Render, Examples) {
    EXPECT_EQ(render(Regex::concat(Regex::alt(b(), c()), a())), "(b+c)a");
    EXPECT_EQ(render(Regex::star(a())), "a*");
    EXPECT_EQ(render(Regex::empty()), "@");
    EXPECT_EQ(render(Regex::epsilon()), "#");
}

TEST(Render, MinimalParentheses) {
    EXPECT_EQ(render(Regex::concat(a(), Regex::concat(b(), c()))), "a(bc)");
    EXPECT_EQ(render(Regex::concat(Regex::concat(a(), b()), c())), "abc");
    EXPECT_EQ(render(Regex::alt(a(), Regex::alt(b(), c()))), "a+(b+c)");
    EXPECT_EQ(render(Regex::star(Regex::concat(a(), b()))), "(ab)*");
    EXPECT_EQ(render(Regex::star(Regex::star(a()))), "a**");
    EXPECT_EQ(render(Regex::concat(Regex::alt(a(), b()), Regex::star(c()))), "(a+b)c*");
}

TEST(Render, ParseRenderRoundTripExhaustive) {
    for (const Regex& r : enumerate_regexes("ab", 5)) {
        ASSERT_EQ(parse(render(r)), r) << render(r);
    }
}

TEST(Render, ParseRenderRoundTripRandom) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 3000; ++i) {
        const Regex r = random_regex(rng, "abc01", 12);
        ASSERT_EQ(parse(render(r)), r) << render(r);
    }
}

TEST(Degree, Examples) {
    EXPECT_EQ(degree(Regex::empty()), 0u);
    EXPECT_EQ(degree(a()), 1u);
    EXPECT_EQ(degree(Regex::epsilon()), 1u);
    EXPECT_EQ(degree(Regex::concat(a(), b())), 3u);
    EXPECT_EQ(degree(Regex::alt(a(), b())), 3u);
    EXPECT_EQ(degree(Regex::star(a())), 2u);
}

TEST(Degree, Sequences) {
    EXPECT_EQ(degree_seq({}), 0u);
    const std::vector<Regex> mixed{a(), Regex::star(a())};
    EXPECT_EQ(degree_seq(mixed), 3u);
    const std::vector<Regex> empties{Regex::empty(), Regex::empty()};
    EXPECT_EQ(degree_seq(empties), 0u);
}

TEST(Degree, ZeroOnlyForEmptyAndChildrenSmaller) {
    for (const Regex& r : enumerate_regexes("ab", 5)) {
        if (r.is(Kind::Empty)) continue;
        ASSERT_GE(degree(r), 1u) << render(r);
        switch (r.kind()) {
            case Kind::Concat:
            case Kind::Union:
                ASSERT_LT(degree(r.right()), degree(r));
                ASSERT_LT(degree(r.left()), degree(r));
                break;
            case Kind::Star: ASSERT_EQ(degree(r.inner()) + 1, degree(r)); break;
            default: break;
        }
    }
}

TEST(Degree, SequenceSumIgnoresOrder) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        std::vector<Regex> rs;
        const int n = std::uniform_int_distribution<int>(0, 5)(rng);
        for (int k = 0; k < n; ++k) rs.push_back(random_regex(rng, "ab", 8));
        const auto before = degree_seq(rs);
        std::shuffle(rs.begin(), rs.end(), rng);
        ASSERT_EQ(degree_seq(rs), before);
    }
}

TEST(Degree, WordsReadAsAtomConcatenations) {
    EXPECT_EQ(word_degree(""), 1u);
    EXPECT_EQ(word_degree("a"), 1u);
    EXPECT_EQ(word_degree("abc"), degree(parse("abc")));
}

TEST(SymbolType, RejectsNonAlphanumerics) {
    EXPECT_NO_THROW(Symbol('Z'));
    EXPECT_NO_THROW(Symbol('7'));
    EXPECT_THROW(Symbol('@'), std::invalid_argument);
    EXPECT_THROW(Symbol(' '), std::invalid_argument);
    EXPECT_TRUE(is_valid_word("ab09Z"));
    EXPECT_FALSE(is_valid_word("a b"));
}

TEST(Enumerate, OrderedByDegreeThenText) {
    const auto rs = enumerate_regexes("ab", 4);
    for (std::size_t i = 1; i < rs.size(); ++i) {
        const auto d0 = degree(rs[i - 1]), d1 = degree(rs[i]);
        ASSERT_TRUE(d0 < d1 || (d0 == d1 && render(rs[i - 1]) < render(rs[i])));
    }
    // 1 + 3 + 15 + 93 + 645: counts of regexes by degree over a two-letter alphabet
    EXPECT_EQ(rs.size(), 757u);
    EXPECT_EQ(enumerate_words("ab", 4).size(), 31u);
}
