#include <gtest/gtest.h>

#include "epist/decompose.hpp"
#include "epist/format.hpp"

using namespace epist;

namespace {

const Alphabet kAb("ab");
const Alphabet kAbc("abc");

Morphism M(const std::string& text) { return parse_morphism(text); }

} // namespace

TEST(ElementaryPsi, Definition) {
    Morphism pa = elementary_psi(kAbc, 0, false);
    EXPECT_EQ(to_text(pa), "a->a,b->ab,c->ac");
    Morphism pbar = elementary_psi(kAb, 0, true);
    EXPECT_EQ(to_text(pbar), "a->a,b->ba");
}

TEST(Morphism, ComposeGolden) {
    Morphism pa = elementary_psi(kAb, 0, false);
    Morphism pb = elementary_psi(kAb, 1, false);
    EXPECT_EQ(to_text(compose(pa, pb)), "a->aba,b->ab");
    Morphism id = Morphism::identity(kAb);
    EXPECT_EQ(compose(pa, id), pa);
}

TEST(Morphism, DBonacciPower) {
    // (psi_a o (a b))^2 = psi_a o psi_b on two letters
    Morphism fib = compose(elementary_psi(kAb, 0, false), Permutation::cycle(kAb, "ab"));
    EXPECT_EQ(to_text(fib), "a->ab,b->a");
    Morphism square = compose(fib, fib);
    Morphism expected = compose(elementary_psi(kAb, 0, false), elementary_psi(kAb, 1, false));
    EXPECT_EQ(square, expected);
}

TEST(ApplySpinned, KnownValues) {
    SpinnedWord u = SpinnedWord::plain(Word::parse(kAb, "aba"));
    Morphism m = apply_spinned(u);
    EXPECT_EQ(m.image(0).str(), "aba");
    EXPECT_EQ(m.image(1).str(), "abaab");

    EXPECT_EQ(apply_spinned(SpinnedWord(kAb)), Morphism::identity(kAb));

    Morphism big = psi(Word::parse(kAbc, "abca"));
    EXPECT_EQ(big.image(0).size(), 7u);
    EXPECT_EQ(big.norm(), 31u);
}

TEST(Morphism, IncidenceAndPrimitivity) {
    Morphism tri = M("a->ab,b->ac,c->a");
    EXPECT_TRUE(is_primitive(tri));
    IncidenceMatrix m = incidence_matrix(tri);
    // column j counts letters of the image of j
    EXPECT_EQ(m[0][0], 1u);
    EXPECT_EQ(m[1][0], 1u);
    EXPECT_EQ(m[2][1], 1u);
    EXPECT_EQ(m[2][2], 0u);

    Morphism barred = compose(elementary_psi(kAbc, 0, true), elementary_psi(kAbc, 1, true));
    EXPECT_EQ(to_text(barred), "a->aba,b->ba,c->caba");
    EXPECT_FALSE(is_primitive(barred));

    Morphism perm = to_morphism(Permutation::cycle(kAbc, "abc"));
    EXPECT_FALSE(is_primitive(perm));
}

TEST(Morphism, PeriodicPointPrefix) {
    Morphism fib = M("a->ab,b->a");
    EXPECT_EQ(periodic_point_prefix(fib, 8).str(), "abaababa");
    Morphism tri = M("a->ab,b->ac,c->a");
    EXPECT_EQ(periodic_point_prefix(tri, 7).str(), "abacaba");
    Morphism perm = to_morphism(Permutation::cycle(kAb, "ab"));
    EXPECT_THROW(periodic_point_prefix(perm, 5), PreconditionError);
}

TEST(Morphism, ConjugateRight) {
    Morphism row0 = M("a->ababa,b->ababac,c->ab");
    auto row1 = conjugate_right(row0, Word::parse(kAbc, "a"));
    ASSERT_TRUE(row1.has_value());
    EXPECT_EQ(to_text(*row1), "a->babaa,b->babaca,c->ba");

    auto same = conjugate_right(row0, Word(kAbc));
    ASSERT_TRUE(same.has_value());
    EXPECT_EQ(*same, row0);

    EXPECT_FALSE(conjugate_right(row0, Word::parse(kAbc, "b")).has_value());
}

TEST(Morphism, IncidenceOfCompositionIsProduct) {
    Morphism s = M("a->ab,b->ac,c->a");
    Morphism r = M("a->ba,b->cc,c->abc");
    IncidenceMatrix mi = incidence_matrix(compose(s, r));
    IncidenceMatrix ms = incidence_matrix(s);
    IncidenceMatrix mr = incidence_matrix(r);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::uint64_t sum = 0;
            for (std::size_t l = 0; l < 3; ++l)
                sum += ms[i][l] * mr[l][j];
            EXPECT_EQ(mi[i][j], sum);
        }
}

TEST(Decompose, StandardMemberDecomposesAllPlain) {
    Morphism row0 = M("a->ababa,b->ababac,c->ab");
    DecomposeResult r = decompose_episturmian(row0);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(r.decomposition->spinned.all_plain());
    EXPECT_EQ(compose(apply_spinned(r.decomposition->spinned), r.decomposition->perm), row0);
}

TEST(Decompose, IdentityIsTrivial) {
    DecomposeResult r = decompose_episturmian(Morphism::identity(kAb));
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(r.decomposition->spinned.empty());
    EXPECT_TRUE(r.decomposition->perm.is_identity());
}

TEST(Decompose, RejectsExchangeMorphism) {
    Morphism exchange = M("a->ab,b->ba");
    DecomposeResult r = decompose_episturmian(exchange);
    EXPECT_FALSE(r.ok());
    EXPECT_FALSE(decompose_episturmian(exchange, StripOrder::BarredFirst).ok());
}

TEST(Decompose, BothOrdersReconstruct) {
    // mixed-spin example where both strip orders apply at some step
    SpinnedWord u = SpinnedWord::parse(kAbc, "a~ba~");
    Morphism sigma = compose(apply_spinned(u), Permutation::cycle(kAbc, "acb"));
    for (StripOrder order : {StripOrder::PlainFirst, StripOrder::BarredFirst}) {
        DecomposeResult r = decompose_episturmian(sigma, order);
        ASSERT_TRUE(r.ok());
        EXPECT_EQ(compose(apply_spinned(r.decomposition->spinned), r.decomposition->perm), sigma);
    }
}

TEST(Commutation, SpotChecks) {
    // psi_{pi(u)} o pi = pi o psi_u
    SpinnedWord u = SpinnedWord::parse(kAbc, "ab~c");
    Permutation p = Permutation::cycle(kAbc, "abc");
    EXPECT_EQ(compose(apply_spinned(apply(p, u)), p), compose(to_morphism(p), apply_spinned(u)));
}

TEST(SpinnedWord, ParseRejectsStraySpins) {
    EXPECT_EQ(SpinnedWord::parse(kAbc, "ab~a").str(), "ab~a");
    EXPECT_THROW(SpinnedWord::parse(kAbc, "~a"), ParseError);
    EXPECT_THROW(SpinnedWord::parse(kAbc, "a~~"), ParseError);
}

TEST(Permutation, OrderAndInverse) {
    Permutation p = Permutation::cycle(kAbc, "abc");
    EXPECT_EQ(p.order(), 3u);
    EXPECT_TRUE((p * p.inverse()).is_identity());
    Permutation swap = Permutation::cycle(kAbc, "bc");
    EXPECT_EQ(swap.order(), 2u);
}
