#ifndef EPIST_CONJUGACY_HPP
#define EPIST_CONJUGACY_HPP

#include <vector>

#include "epist/decompose.hpp"
#include "epist/palindromic.hpp"

namespace epist {

/// (norm - |A|) / (|A| - 1): the largest conjugacy index in the class of sigma,
/// one less than the class cardinality.
inline std::size_t max_index(const Morphism& sigma) {
    std::size_t k = sigma.alphabet().size();
    std::size_t n = sigma.norm();
    if ((n - k) % (k - 1) != 0)
        throw TheoryViolation("class size: (norm-|A|) not divisible by |A|-1");
    return (n - k) / (k - 1);
}

/// Distance to the standard member of the conjugacy class. Evaluates both
/// closed forms over every letter pair and insists that they agree.
inline std::size_t conjugacy_index(const Morphism& sigma) {
    require_episturmian(sigma, "conjugacy_index");
    const Alphabet& alpha = sigma.alphabet();
    std::size_t m = max_index(sigma);
    std::size_t ind = 0;
    bool have = false;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        for (std::size_t b = 0; b < alpha.size(); ++b) {
            if (a == b)
                continue;
            Word sab = sigma.image(static_cast<Letter>(a)) + sigma.image(static_cast<Letter>(b));
            Word sba = sigma.image(static_cast<Letter>(b)) + sigma.image(static_cast<Letter>(a));
            std::size_t via_gcs = gcs(sab, sba).size();
            std::size_t gcp_len = gcp(sab, sba).size();
            if (gcp_len > m)
                throw TheoryViolation("conjugacy_index: gcp formula out of range");
            std::size_t via_gcp = m - gcp_len;
            if (via_gcs != via_gcp)
                throw TheoryViolation("conjugacy_index: gcs and gcp formulas disagree");
            if (have && via_gcs != ind)
                throw TheoryViolation("conjugacy_index: value depends on the letter pair");
            ind = via_gcs;
            have = true;
        }
    }
    return ind;
}

/// The unique standard member of the class of sigma, with the conjugating
/// word w (so that std = w sigma w^-1 and |w| = ind(sigma)).
inline std::pair<Morphism, Word> standard_conjugate(const Morphism& sigma) {
    require_episturmian(sigma, "standard_conjugate");
    std::size_t ind = conjugacy_index(sigma);
    Word sab = sigma.image(0) + sigma.image(1);
    Word sba = sigma.image(1) + sigma.image(0);
    Word w = gcs(sab, sba);
    if (w.size() != ind)
        throw TheoryViolation("standard_conjugate: conjugating word length mismatch");
    auto std_m = conjugate_left(sigma, w);
    if (!std_m)
        throw TheoryViolation("standard_conjugate: left conjugation failed");
    DecomposeResult dec = decompose_episturmian(*std_m);
    if (!dec.ok() || !dec.decomposition->spinned.all_plain())
        throw TheoryViolation("standard_conjugate: result is not standard");
    return {*std_m, w};
}

/// A full conjugacy class ordered by index: members[i] is the i-th right
/// conjugate of the standard member, obtained by the length-i prefix of
/// Pal(directive).
struct ConjugacyClass {
    Word directive;    // plain directive word u of the standard member
    Permutation perm;  // permutation part, shared by the whole class
    Word pal;          // Pal(directive)
    std::vector<Morphism> members;
};

inline ConjugacyClass enumerate_class(const Morphism& sigma) {
    auto [std_m, w] = standard_conjugate(sigma);
    DecomposeResult dec = decompose_episturmian(std_m);
    Word u = dec.decomposition->spinned.unspinned();
    Word p = pal(u);
    std::size_t m = max_index(sigma);
    if (p.size() != m)
        throw TheoryViolation("enumerate_class: |Pal(u)| disagrees with the class cardinality");
    ConjugacyClass cls{u, dec.decomposition->perm, p, {}};
    for (std::size_t i = 0; i <= m; ++i) {
        auto member = conjugate_right(std_m, p.prefix(i));
        if (!member)
            throw TheoryViolation("enumerate_class: prefix of Pal failed to conjugate");
        cls.members.push_back(std::move(*member));
    }
    if (!(cls.members.at(w.size()) == sigma))
        throw TheoryViolation("enumerate_class: input not found at its own index");
    return cls;
}

/// The minimal letter of a non-permutation episturmian morphism and the
/// structural facts attached to it.
struct MinLetterReport {
    Letter a_min{};
    std::size_t j{};   // |sigma(a_min)|
    std::size_t ind{}; // conjugacy index of sigma
    std::size_t m{};   // class size minus one
    bool suffix_closed{}; // sigma(A) subset A* sigma(a_min)
    bool prefix_closed{}; // sigma(A) subset sigma(a_min) A*
};

inline MinLetterReport minimal_letter(const Morphism& sigma) {
    if (sigma.is_permutation())
        throw PreconditionError("minimal_letter: permutations have no minimal letter");
    const Alphabet& alpha = sigma.alphabet();
    Letter best = 0;
    bool strict = true;
    for (std::size_t a = 1; a < alpha.size(); ++a) {
        std::size_t la = sigma.image(static_cast<Letter>(a)).size();
        std::size_t lb = sigma.image(best).size();
        if (la < lb) {
            best = static_cast<Letter>(a);
            strict = true;
        } else if (la == lb) {
            strict = false;
        }
    }
    if (!strict)
        throw PreconditionError("minimal_letter: no strictly shortest image (non-episturmian input?)");
    MinLetterReport r;
    r.a_min = best;
    r.j = sigma.image(best).size();
    r.ind = conjugacy_index(sigma);
    r.m = max_index(sigma);
    const Word& img = sigma.image(best);
    r.suffix_closed = true;
    r.prefix_closed = true;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        r.suffix_closed = r.suffix_closed && sigma.image(static_cast<Letter>(a)).ends_with(img);
        r.prefix_closed = r.prefix_closed && sigma.image(static_cast<Letter>(a)).starts_with(img);
    }
    // invariants of the report (violations signal a bug upstream)
    if (r.suffix_closed != (r.ind >= r.j))
        throw TheoryViolation("minimal_letter: suffix-closure does not match ind >= j");
    if (r.prefix_closed != (r.ind + r.j <= r.m))
        throw TheoryViolation("minimal_letter: prefix-closure does not match ind <= m - j");
    if (!r.suffix_closed && !r.prefix_closed)
        throw TheoryViolation("minimal_letter: neither closure holds");
    if (2 * r.j > r.m + 1)
        throw TheoryViolation("minimal_letter: 2|sigma(a_min)| exceeds the class cardinality");
    return r;
}

/// The factorization Pal(u) = gcs(sigma(ab), sigma(ba)) gcp(sigma(ab), sigma(ba)),
/// checked to be independent of the letter pair.
inline std::pair<Word, Word> gcs_gcp_factorization(const Morphism& sigma) {
    require_episturmian(sigma, "gcs_gcp_factorization");
    const Alphabet& alpha = sigma.alphabet();
    std::optional<std::pair<Word, Word>> result;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
        for (std::size_t b = 0; b < alpha.size(); ++b) {
            if (a == b)
                continue;
            Word sab = sigma.image(static_cast<Letter>(a)) + sigma.image(static_cast<Letter>(b));
            Word sba = sigma.image(static_cast<Letter>(b)) + sigma.image(static_cast<Letter>(a));
            std::pair<Word, Word> xy{gcs(sab, sba), gcp(sab, sba)};
            if (result && !(result->first == xy.first && result->second == xy.second))
                throw TheoryViolation("gcs_gcp_factorization: depends on the letter pair");
            result = std::move(xy);
        }
    }
    return *result;
}

} // namespace epist

#endif
