#include <gtest/gtest.h>

#include "epist/conjugacy.hpp"
#include "epist/format.hpp"

using namespace epist;

namespace {

const Alphabet kAb("ab");
const Alphabet kAbc("abc");

Morphism M(const std::string& text) { return parse_morphism(text); }

} // namespace

TEST(ConjugacyIndex, KnownValues) {
    EXPECT_EQ(conjugacy_index(M("a->abaab,b->abacab,c->ab")), 2u);
    EXPECT_EQ(conjugacy_index(M("a->ababa,b->ababac,c->ab")), 0u);
    EXPECT_EQ(conjugacy_index(M("a->ababa,b->cababa,c->ba")), 5u);
    EXPECT_THROW(conjugacy_index(M("a->ab,b->ba")), PreconditionError);
}

TEST(ConjugacyIndex, GcsLengthSpot) {
    Morphism row1 = M("a->babaa,b->babaca,c->ba");
    Word sab = row1.image(0) + row1.image(1);
    Word sba = row1.image(1) + row1.image(0);
    EXPECT_EQ(gcs(sab, sba).size(), 1u);
    EXPECT_EQ(conjugacy_index(row1), 1u);
}

TEST(StandardConjugate, KnownClass) {
    auto [std_m, w] = standard_conjugate(M("a->baaba,b->bacaba,c->ba"));
    EXPECT_EQ(to_text(std_m), "a->ababa,b->ababac,c->ab");
    EXPECT_EQ(w.str(), "aba");

    Morphism row0 = M("a->ababa,b->ababac,c->ab");
    auto [same, eps] = standard_conjugate(row0);
    EXPECT_EQ(same, row0);
    EXPECT_TRUE(eps.empty());

    Morphism barred_a = elementary_psi(kAb, 0, true);
    auto [plain_a, wa] = standard_conjugate(barred_a);
    EXPECT_EQ(plain_a, elementary_psi(kAb, 0, false));
    EXPECT_EQ(wa.str(), "a");
}

TEST(EnumerateClass, KnownTernaryClass) {
    ConjugacyClass cls = enumerate_class(M("a->ababa,b->ababac,c->ab"));
    ASSERT_EQ(cls.members.size(), 6u);
    const char* expected[] = {
        "a->ababa,b->ababac,c->ab", "a->babaa,b->babaca,c->ba", "a->abaab,b->abacab,c->ab",
        "a->baaba,b->bacaba,c->ba", "a->aabab,b->acabab,c->ab", "a->ababa,b->cababa,c->ba"};
    const char* prefixes[] = {"", "a", "ab", "aba", "abab", "ababa"};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(to_text(cls.members[i]), expected[i]);
        EXPECT_EQ(cls.pal.prefix(i).str(), prefixes[i]);
        EXPECT_EQ(conjugacy_index(cls.members[i]), i);
    }
    // entering by a non-standard member lands in the same class
    ConjugacyClass again = enumerate_class(M("a->aabab,b->acabab,c->ab"));
    EXPECT_EQ(again.members, cls.members);
}

TEST(EnumerateClass, PsiAHasTwoMembers) {
    ConjugacyClass cls = enumerate_class(elementary_psi(kAb, 0, false));
    ASSERT_EQ(cls.members.size(), 2u);
    EXPECT_EQ(cls.members[0], elementary_psi(kAb, 0, false));
    EXPECT_EQ(cls.members[1], elementary_psi(kAb, 0, true));
}

TEST(MinimalLetter, DBonacci) {
    // d-bonacci: a_min is the last letter, image length 1
    Morphism fib = compose(elementary_psi(kAb, 0, false), Permutation::cycle(kAb, "ab"));
    MinLetterReport r = minimal_letter(fib);
    EXPECT_EQ(r.a_min, 1);
    EXPECT_EQ(r.j, 1u);
    EXPECT_EQ(r.m, 1u);
    EXPECT_TRUE(r.prefix_closed);
    EXPECT_FALSE(r.suffix_closed);

    Morphism tri = compose(elementary_psi(kAbc, 0, false), Permutation::cycle(kAbc, "abc"));
    MinLetterReport rt = minimal_letter(tri);
    EXPECT_EQ(rt.a_min, 2);
    EXPECT_EQ(rt.j, 1u);
}

TEST(MinimalLetter, PsiAbcaOverlapAtSeven) {
    ConjugacyClass cls = enumerate_class(psi(Word::parse(kAbc, "abca")));
    ASSERT_EQ(cls.members.size(), 15u);
    // the documented conjugates of index 6, 7 and 8
    EXPECT_EQ(to_text(cls.members[6]), "a->aabacab,b->aabacababacab,c->aabacabacab");
    EXPECT_EQ(to_text(cls.members[7]), "a->abacaba,b->abacababacaba,c->abacabacaba");
    EXPECT_EQ(to_text(cls.members[8]), "a->bacabaa,b->bacababacabaa,c->bacabacabaa");
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
        MinLetterReport r = minimal_letter(cls.members[i]);
        EXPECT_EQ(r.a_min, 0);
        EXPECT_EQ(r.j, 7u);
        EXPECT_EQ(r.m, 14u);
        EXPECT_EQ(r.suffix_closed, i >= 7);
        EXPECT_EQ(r.prefix_closed, i <= 7);
        // 2j = 14 < 15 = m + 1: the inequality is strict for this class
        EXPECT_LT(2 * r.j, r.m + 1);
    }
    MinLetterReport seven = minimal_letter(cls.members[7]);
    EXPECT_TRUE(seven.suffix_closed && seven.prefix_closed);
}

TEST(MinimalLetter, RejectsPermutations) {
    EXPECT_THROW(minimal_letter(to_morphism(Permutation::cycle(kAb, "ab"))), PreconditionError);
}

TEST(GcsGcpFactorization, ClassEndpoints) {
    ConjugacyClass cls = enumerate_class(M("a->ababa,b->ababac,c->ab"));
    auto [x0, y0] = gcs_gcp_factorization(cls.members[0]);
    EXPECT_TRUE(x0.empty());
    EXPECT_EQ(y0, cls.pal);
    auto [x5, y5] = gcs_gcp_factorization(cls.members[5]);
    EXPECT_EQ(x5, cls.pal);
    EXPECT_TRUE(y5.empty());
    auto [x2, y2] = gcs_gcp_factorization(cls.members[2]);
    EXPECT_EQ(x2.str(), "ab");
    EXPECT_EQ(x2 + y2, cls.pal);
    // the factorization recovers the directive of the class
    EXPECT_EQ(pal_inverse(x2 + y2).value(), cls.directive);
}
