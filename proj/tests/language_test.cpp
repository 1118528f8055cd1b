#include <gtest/gtest.h>

#include "epist/format.hpp"
#include "epist/returns.hpp"

using namespace epist;

namespace {

const Alphabet kAb("ab");
const Alphabet kAbcd("abcd");

Morphism M(const std::string& text) { return parse_morphism(text); }

std::set<std::string> strs(const std::set<Word>& words) {
    std::set<std::string> out;
    for (const Word& w : words)
        out.insert(w.str());
    return out;
}

} // namespace

TEST(Language, FibonacciWindows) {
    Morphism fib = M("a->ab,b->a");
    EXPECT_EQ(strs(language(fib, 2).factors), (std::set<std::string>{"aa", "ab", "ba"}));
    EXPECT_EQ(language(fib, 1).factors.size(), 2u);
    // Sturmian complexity n + 1
    for (std::size_t n = 1; n <= 12; ++n)
        EXPECT_EQ(language(fib, n).factors.size(), n + 1);
}

TEST(Language, TribonacciLetters) {
    Morphism tri = M("a->ab,b->ac,c->a");
    EXPECT_EQ(strs(language(tri, 1).factors), (std::set<std::string>{"a", "b", "c"}));
}

TEST(Language, RejectsNonPrimitive) {
    EXPECT_THROW(language(M("a->aba,b->ba,c->caba"), 2), PreconditionError);
}

TEST(Language, IterationCapIsLoud) {
    LanguageLimits tight;
    tight.max_iterations = 1;
    EXPECT_THROW(language(M("a->ab,b->a"), 6, tight), LimitExceeded);
}

TEST(SpecialFactors, FibonacciSmall) {
    Morphism fib = M("a->ab,b->a");
    SpecialFactors sf = special_factors(fib, 1);
    ASSERT_TRUE(sf.left.has_value());
    ASSERT_TRUE(sf.right.has_value());
    EXPECT_EQ(sf.left->str(), "a");
    EXPECT_EQ(sf.right->str(), "a");
    EXPECT_TRUE(sf.bispecial);

    SpecialFactors sf2 = special_factors(fib, 2);
    EXPECT_EQ(sf2.left->str(), "ab");
    EXPECT_EQ(sf2.right->str(), "ba");
    EXPECT_FALSE(sf2.bispecial);
}

TEST(RauzyGraph, TetrabonacciOrderFour) {
    Morphism tet = M("a->ab,b->ac,c->ad,d->a");
    RauzyGraph g = rauzy_graph(tet, 4);
    EXPECT_EQ(g.vertices.size(), 13u);
    EXPECT_EQ(g.edges.size(), 16u);
    EXPECT_EQ(g.vertex(g.left_special).str(), "abac");
    EXPECT_EQ(g.vertex(g.right_special).str(), "caba");
    EXPECT_EQ(g.inner_left.str(), "aba");
    ASSERT_EQ(g.outer.size(), 4u);
    EXPECT_EQ(g.outer.at(kAbcd.index_of('a')).left_word.str(), "caba");
    EXPECT_EQ(g.outer.at(kAbcd.index_of('b')).left_word.str(), "cab");
    EXPECT_EQ(g.outer.at(kAbcd.index_of('c')).left_word.str(), "c");
    EXPECT_EQ(g.outer.at(kAbcd.index_of('d')).left_word.str(), "cabad");
    // the length-1 outer branch is the loop edge labelled c
    EXPECT_EQ(g.outer.at(kAbcd.index_of('c')).edges.size(), 1u);
}

TEST(RauzyGraph, BispecialInnerIsSingleVertex) {
    Morphism fib = M("a->ab,b->a");
    RauzyGraph g = rauzy_graph(fib, 1);
    EXPECT_TRUE(g.bispecial());
    EXPECT_EQ(g.inner_vertices.size(), 1u);
    EXPECT_TRUE(g.inner_left.empty());
    EXPECT_EQ(g.outer.at(0).left_word.str(), "a");
    EXPECT_EQ(g.outer.at(1).left_word.str(), "ab");
    // dual labels: branches keyed by their first right label
    EXPECT_EQ(g.dual_outer.at(0).right_word.str(), "a");
    EXPECT_EQ(g.dual_outer.at(1).right_word.str(), "ba");
}

TEST(Evolution, SmallCases) {
    Morphism fib = M("a->ab,b->a");
    for (std::size_t n = 0; n <= 10; ++n) {
        EvolutionReport rep = evolution_check(fib, n);
        EXPECT_TRUE(rep.ok()) << "fibonacci n=" << n << ": "
                              << (rep.violations.empty() ? "" : rep.violations[0]);
    }
    Morphism tri = M("a->ab,b->ac,c->a");
    for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_TRUE(evolution_check(tri, n).ok()) << "tribonacci n=" << n;
    Morphism tet = M("a->ab,b->ac,c->ad,d->a");
    for (std::size_t n = 3; n <= 5; ++n)
        EXPECT_TRUE(evolution_check(tet, n).ok()) << "tetrabonacci n=" << n;
}

TEST(DirectiveWordOf, KnownShifts) {
    EXPECT_EQ(directive_word(M("a->ab,b->a")).period().str(), "ab");
    EXPECT_EQ(directive_word(M("a->ab,b->ac,c->a")).period().str(), "abc");
    // example shift: psi_abb o (a c b)
    EXPECT_EQ(directive_word(M("a->ababac,b->ababa,c->ab")).period().str(), "abbcaabcc");
    // conjugates share the directive word of their class
    Morphism member = *conjugate_right(M("a->ababac,b->ababa,c->ab"), Word::parse(Alphabet("abc"), "a"));
    EXPECT_EQ(directive_word(member).period().str(), "abbcaabcc");
}

TEST(InnerWordData, ExampleShift) {
    Morphism edl = M("a->ababac,b->ababa,c->ab");
    Alphabet abc("abc");

    InnerWordData first = inner_word_data(edl, Word::parse(abc, "ababacab"));
    EXPECT_TRUE(first.is_inner);
    EXPECT_EQ(first.inner_index, 0u);
    EXPECT_EQ(first.d.str(), "abbc");
    EXPECT_EQ(first.ell, 0u);
    EXPECT_EQ(first.ell_prime, 3u);

    InnerWordData last = inner_word_data(edl, Word::parse(abc, "bacababa"));
    EXPECT_TRUE(last.is_inner);
    EXPECT_EQ(last.inner_index, 3u);
    EXPECT_EQ(last.d.str(), "abbc");
    EXPECT_EQ(last.ell, 3u);
    EXPECT_EQ(last.ell_prime, 0u);

    InnerWordData outer = inner_word_data(edl, Word::parse(abc, "acababab"));
    EXPECT_FALSE(outer.is_inner);
    EXPECT_EQ(outer.d.str(), "abbcaab");
    EXPECT_EQ(outer.ell, 26u);

    EXPECT_THROW(inner_word_data(edl, Word::parse(abc, "cc")), PreconditionError);
}

TEST(Language, AgreesWithStandardWordWindows) {
    // the iteration path and the palindromic-prefix path must produce the
    // same factor sets once the prefix is long enough
    for (const char* text : {"a->ab,b->a", "a->ab,b->ac,c->a", "a->ababac,b->ababa,c->ab"}) {
        Morphism m = M(text);
        ReturnsEngine engine(m);
        for (std::size_t n = 1; n <= 15; ++n) {
            std::set<Word> iterated = language(m, n).factors;
            Word prefix = engine.left_special(std::max<std::size_t>(60 * n, 400));
            std::set<Word> windows;
            for (std::size_t i = 0; i + n <= prefix.size(); ++i)
                windows.insert(prefix.subword(i, n));
            EXPECT_EQ(iterated, windows) << text << " n=" << n;
        }
    }
}

TEST(Language, BispecialsArePalPrefixLengths) {
    Morphism edl = M("a->ababac,b->ababa,c->ab");
    ReturnsEngine engine(edl);
    std::vector<std::size_t> bis = engine.bispecial_lengths(25);
    EXPECT_EQ(bis, (std::vector<std::size_t>{0, 1, 3, 5, 11, 22}));
    for (std::size_t n = 1; n <= 12; ++n) {
        SpecialFactors sf = special_factors(edl, n);
        bool expected = std::find(bis.begin(), bis.end(), n) != bis.end();
        EXPECT_EQ(sf.bispecial, expected) << "n=" << n;
        // L_n is the length-n prefix of Pal(d)
        ASSERT_TRUE(sf.left.has_value());
        EXPECT_EQ(*sf.left, engine.left_special(n));
        EXPECT_EQ(*sf.right, reverse(engine.left_special(n)));
    }
}
