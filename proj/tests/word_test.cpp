#include <gtest/gtest.h>

#include "epist/word.hpp"

using namespace epist;

namespace {

const Alphabet kAbc("abc");

Word W(const std::string& s) { return Word::parse(kAbc, s); }

} // namespace

TEST(Alphabet, RejectsDegenerateAndDuplicates) {
    EXPECT_THROW(Alphabet("a"), PreconditionError);
    EXPECT_THROW(Alphabet("aba"), PreconditionError);
    EXPECT_EQ(Alphabet("ab").size(), 2u);
}

TEST(Word, ConcatBasics) {
    EXPECT_EQ(W("ab") + W("a"), W("aba"));
    EXPECT_EQ(Word(kAbc) + W("abc"), W("abc"));
    EXPECT_EQ(W("ba") + W("ca"), W("baca"));
    EXPECT_EQ((W("ab") + W("a")).size(), 3u);
}

TEST(Word, ConcatRejectsForeignAlphabet) {
    Word other = Word::parse(Alphabet("xy"), "x");
    EXPECT_THROW(W("a") + other, AlphabetMismatch);
}

TEST(Word, GcpExamples) {
    EXPECT_EQ(gcp(W("abaab"), W("abaaba")), W("abaab"));
    EXPECT_EQ(gcp(W("ab"), W("ba")), Word(kAbc));
}

TEST(Word, GcsExamples) {
    EXPECT_EQ(gcs(W("aab"), W("bab")).str(), "ab");
    EXPECT_EQ(gcs(W("ab"), W("ba")), Word(kAbc));
}

TEST(Word, OccurrencesOverlap) {
    EXPECT_EQ(occurrences(W("aa"), W("aaa")), (OccurrenceList{0, 1}));
    EXPECT_EQ(occurrences(W("aba"), W("abacaba")), (OccurrenceList{0, 4}));
    EXPECT_THROW(occurrences(Word(kAbc), W("a")), PreconditionError);
}

TEST(Word, ReverseAndPalindrome) {
    EXPECT_EQ(reverse(W("abc")), W("cba"));
    EXPECT_TRUE(is_palindrome(W("abaaba")));
    EXPECT_FALSE(is_palindrome(W("ab")));
    EXPECT_TRUE(is_palindrome(Word(kAbc)));
}

TEST(Word, GcpGcsDualityExhaustiveShort) {
    // all pairs of words of length <= 4 over two letters
    Alphabet ab("ab");
    std::vector<Word> words;
    for (int len = 0; len <= 4; ++len)
        for (int code = 0; code < (1 << len); ++code) {
            std::string s(len, '\0');
            for (int i = 0; i < len; ++i)
                s[i] = static_cast<char>((code >> i) & 1);
            words.emplace_back(ab, s);
        }
    for (const Word& u : words)
        for (const Word& v : words) {
            EXPECT_EQ(gcp(u, v), reverse(gcs(reverse(u), reverse(v))));
            Word g = gcp(u, v);
            EXPECT_TRUE(u.starts_with(g));
            EXPECT_TRUE(v.starts_with(g));
            if (g.size() < u.size() && g.size() < v.size()) {
                EXPECT_NE(u.at(g.size()), v.at(g.size()));
            }
        }
}

TEST(Word, StripHelpers) {
    EXPECT_EQ(strip_prefix(W("abac"), W("ab")), W("ac"));
    EXPECT_EQ(strip_suffix(W("abac"), W("ac")), W("ab"));
    EXPECT_THROW(strip_prefix(W("abac"), W("b")), PreconditionError);
}
