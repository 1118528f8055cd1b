#include <gtest/gtest.h>

#include "epist/format.hpp"
#include "epist/returns.hpp"

using namespace epist;

namespace {

const Alphabet kAb("ab");
const Alphabet kAbc("abc");

Morphism M(const std::string& text) { return parse_morphism(text); }

std::set<std::string> strs(const std::set<Word>& words) {
    std::set<std::string> out;
    for (const Word& w : words)
        out.insert(w.str());
    return out;
}

const char* kDlReturns[] = {
    "acabababacababaababacababaabab",
    "acabababacababaababacababaababacababaabab",
    "acabababacababaababacababaababacababacababaababacababaabab",
};

} // namespace

TEST(ReturnsOracle, Fibonacci) {
    Morphism fib = M("a->ab,b->a");
    EXPECT_EQ(strs(returns_oracle(fib, Word::parse(kAb, "a"), Side::Left)),
              (std::set<std::string>{"a", "ab"}));
    EXPECT_EQ(strs(returns_oracle(fib, Word::parse(kAb, "ab"), Side::Left)),
              (std::set<std::string>{"ab", "aba"}));
    EXPECT_EQ(strs(returns_oracle(fib, Word::parse(kAb, "a"), Side::Right)),
              (std::set<std::string>{"a", "ba"}));
    EXPECT_THROW(returns_oracle(fib, Word::parse(kAb, "bb"), Side::Left), PreconditionError);
}

TEST(ReturnsOracle, ExampleShift) {
    Morphism edl = M("a->ababac,b->ababa,c->ab");
    std::set<Word> left = returns_oracle(edl, Word::parse(kAbc, "acababab"), Side::Left);
    EXPECT_EQ(strs(left), (std::set<std::string>{kDlReturns[0], kDlReturns[1], kDlReturns[2]}));
}

TEST(ConjugatePsi, Identities) {
    Word u = Word::parse(kAbc, "abb");
    EXPECT_EQ(conjugate_psi(u, 0, Side::Right), psi(u));
    std::size_t m = pal(u).size();
    EXPECT_EQ(conjugate_psi(u, m, Side::Right), psi_bar(u));
    // left family: i-th left conjugate of psi_bar equals (m-i)-th right conjugate
    for (std::size_t i = 0; i <= m; ++i)
        EXPECT_EQ(conjugate_psi(u, i, Side::Left), conjugate_psi(u, m - i, Side::Right));
    EXPECT_THROW(conjugate_psi(u, m + 1, Side::Right), PreconditionError);
}

TEST(ConjugatePsi, ExampleValues) {
    // psi_abbcaab^(26) applied to the letters gives the example's return words
    Word u = Word::parse(kAbc, "abbcaab");
    Morphism conj = conjugate_psi(u, 26, Side::Right);
    std::set<Word> images(conj.images().begin(), conj.images().end());
    EXPECT_EQ(strs(images), (std::set<std::string>{kDlReturns[0], kDlReturns[1], kDlReturns[2]}));
}

TEST(ReturnsClosedForm, ExampleShift) {
    Morphism edl = M("a->ababac,b->ababa,c->ab");
    ReturnComputation rc = returns_closed_form(edl, Word::parse(kAbc, "acababab"));
    EXPECT_EQ(rc.d.str(), "abbcaab");
    EXPECT_EQ(rc.ell, 26u);
    EXPECT_EQ(rc.ell_prime, 29u);
    EXPECT_EQ(strs(rc.left_returns),
              (std::set<std::string>{kDlReturns[0], kDlReturns[1], kDlReturns[2]}));
    // the three words have lengths 30, 41 and 58
    std::vector<std::size_t> lens;
    for (const Word& w : rc.left_returns)
        lens.push_back(w.size());
    EXPECT_EQ(lens, (std::vector<std::size_t>{30, 41, 58}));
}

TEST(ReturnsClosedForm, NonFactorTripsTheCap) {
    Morphism fib = M("a->ab,b->a");
    EXPECT_THROW(returns_closed_form(fib, Word::parse(kAb, "bb")), LimitExceeded);
}

TEST(ReturnsClosedForm, FibonacciLetter) {
    Morphism fib = M("a->ab,b->a");
    ReturnComputation rc = returns_closed_form(fib, Word::parse(kAb, "a"));
    EXPECT_EQ(rc.d.str(), "a");
    EXPECT_EQ(rc.ell, 0u);
    EXPECT_EQ(rc.ell_prime, 0u);
    EXPECT_EQ(strs(rc.left_returns), (std::set<std::string>{"a", "ab"}));
    EXPECT_EQ(strs(rc.right_returns), (std::set<std::string>{"a", "ba"}));
}

TEST(ReturnsClosedForm, BispecialGivesPsiImages) {
    // u = Pal(d[0,k)) bispecial: ell = 0 and left returns are the psi images
    Morphism edl = M("a->ababac,b->ababa,c->ab");
    ReturnsEngine engine(edl);
    Word bispecial = engine.left_special(11); // Pal(abbc)
    ReturnComputation rc = engine.returns_closed_form(bispecial);
    EXPECT_EQ(rc.ell, 0u);
    EXPECT_EQ(rc.d.str(), "abbc");
    Morphism base = psi(Word::parse(kAbc, "abbc"));
    std::set<Word> expected(base.images().begin(), base.images().end());
    EXPECT_EQ(rc.left_returns, expected);
}

TEST(ReturnsClosedForm, MatchesOracleOnShortFactors) {
    for (const char* text : {"a->ab,b->a", "a->ababac,b->ababa,c->ab"}) {
        Morphism m = M(text);
        ReturnsEngine engine(m);
        OracleScanner scanner(m);
        for (std::size_t len = 1; len <= 6; ++len) {
            for (const Word& f : language(m, len).factors) {
                ReturnComputation closed = engine.returns_closed_form(f);
                ReturnComputation oracle = scanner.returns_both(f);
                EXPECT_EQ(closed.left_returns, oracle.left_returns) << f.str();
                EXPECT_EQ(closed.right_returns, oracle.right_returns) << f.str();
                EXPECT_EQ(closed.left_returns.size(), m.alphabet().size());
                // eq:return elementwise
                std::set<Word> derived;
                for (const Word& r : closed.right_returns) {
                    Word s = f + r;
                    ASSERT_TRUE(s.ends_with(f));
                    derived.insert(s.prefix(s.size() - f.size()));
                }
                EXPECT_EQ(derived, closed.left_returns);
            }
        }
    }
}

TEST(DllFromPair, FibonacciPair) {
    Word u = Word::parse(kAb, "a");
    DllResult r = dll_from_pair(Word::parse(kAb, "a"), Word::parse(kAb, "ab"), u, Side::Left);
    EXPECT_EQ(r.d.str(), "a");
    EXPECT_EQ(r.ell, 0u);
    EXPECT_EQ(r.ell_prime, 0u);
    EXPECT_THROW(dll_from_pair(u, u, u, Side::Left), PreconditionError);
}

TEST(DllFromPair, ExamplePairsAgree) {
    Morphism edl = M("a->ababac,b->ababa,c->ab");
    Word u = Word::parse(kAbc, "acababab");
    ReturnComputation rc = returns_closed_form(edl, u);
    std::vector<Word> left(rc.left_returns.begin(), rc.left_returns.end());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < left.size(); ++j) {
            if (i == j)
                continue;
            DllResult r = dll_from_pair(left[i], left[j], u, Side::Left);
            EXPECT_EQ(r.d.str(), "abbcaab");
            EXPECT_EQ(r.ell, 26u);
            EXPECT_EQ(r.ell_prime, rc.ell_prime);
        }
    std::vector<Word> right(rc.right_returns.begin(), rc.right_returns.end());
    for (std::size_t i = 0; i < right.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (i == j)
                continue;
            DllResult r = dll_from_pair(right[i], right[j], u, Side::Right);
            EXPECT_EQ(r.d.str(), "abbcaab");
            EXPECT_EQ(r.ell, 26u);
            EXPECT_EQ(r.ell_prime, rc.ell_prime);
        }
}

TEST(Returns, OccurrenceOfExampleFactor) {
    // the example factor first appears at index 26 of Pal(abbcaab)
    Word p = pal(Word::parse(kAbc, "abbcaab"));
    OccurrenceList occ = occurrences(Word::parse(kAbc, "acababab"), p);
    EXPECT_EQ(occ, (OccurrenceList{26}));
}

TEST(Returns, FreeGroupBasisViaInvertibility) {
    // each left return set is the image of the letters under a morphism with
    // an episturmian decomposition, hence a free-group basis
    Morphism edl = M("a->ababac,b->ababa,c->ab");
    ReturnsEngine engine(edl);
    for (std::size_t len = 1; len <= 4; ++len)
        for (const Word& f : language(edl, len).factors) {
            ReturnComputation rc = engine.returns_closed_form(f);
            Morphism conj = conjugate_psi(rc.d, rc.ell, Side::Right);
            std::set<Word> images(conj.images().begin(), conj.images().end());
            EXPECT_EQ(images, rc.left_returns);
            EXPECT_TRUE(decompose_episturmian(conj).ok());
        }
}
