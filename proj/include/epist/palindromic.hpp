#ifndef EPIST_PALINDROMIC_HPP
#define EPIST_PALINDROMIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "epist/spinned.hpp"

namespace epist {

/// Shortest palindrome with x as a prefix, via the longest palindromic suffix.
inline Word pal_closure(const Word& x) {
    const std::string& s = x.indices();
    std::size_t n = s.size();
    std::size_t k = n; // length of longest palindromic suffix
    for (; k > 0; --k) {
        bool pal = true;
        for (std::size_t i = 0; i < k / 2; ++i)
            if (s[n - k + i] != s[n - 1 - i]) {
                pal = false;
                break;
            }
        if (pal)
            break;
    }
    std::string out = s;
    for (std::size_t i = n - k; i > 0; --i)
        out.push_back(s[i - 1]);
    return Word(x.alphabet(), std::move(out));
}

/// Iterated palindromic closure: Pal(ua) = (Pal(u)a)^(+), Pal(eps) = eps.
inline Word pal(const Word& u) {
    Word p(u.alphabet());
    for (std::size_t i = 0; i < u.size(); ++i)
        p = pal_closure(p + Word::single(u.alphabet(), u.at(i)));
    return p;
}

/// Inverse of pal. Reads directive letters off the palindromic prefixes and
/// verifies every closure step lands back inside p; never guesses.
inline std::optional<Word> pal_inverse(const Word& p) {
    Word u(p.alphabet());
    Word cur(p.alphabet());
    while (cur.size() < p.size()) {
        Letter next = p.at(cur.size());
        u = u + Word::single(p.alphabet(), next);
        cur = pal_closure(cur + Word::single(p.alphabet(), next));
        if (cur.size() > p.size() || !p.starts_with(cur))
            return std::nullopt;
    }
    return u;
}

/// Both sides of Justin's formula (J): Pal(uv) = psi_u(Pal(v)) Pal(u).
inline std::pair<Word, Word> justin_left(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet(), "justin_left");
    Word lhs = pal(u + v);
    Word rhs = psi(u).apply(pal(v)) + pal(u);
    return {lhs, rhs};
}

/// Both sides of the dual formula (J'): Pal(uv) = Pal(u) psibar_u(Pal(v)).
inline std::pair<Word, Word> justin_right(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet(), "justin_right");
    Word lhs = pal(u + v);
    Word rhs = pal(u) + psi_bar(u).apply(pal(v));
    return {lhs, rhs};
}

/// |Pal(u)| from the closed form |Pal(u)|+1 = (norm(psi_u)-1)/(|A|-1),
/// without computing Pal(u).
inline std::size_t pal_length(const Word& u) {
    std::size_t k = u.alphabet().size();
    std::size_t n = psi(u).norm();
    if ((n - 1) % (k - 1) != 0)
        throw TheoryViolation("pal_length: (norm-1) not divisible by |A|-1");
    return (n - 1) / (k - 1) - 1;
}

/// Node of the standard tree: a directive word with its standard tuple
/// (psi_u(a))_{a in A}. Children sit at consecutive indices.
struct StandardTreeNode {
    Word directive;
    std::vector<Word> tuple;
    std::vector<std::size_t> children;
};

/// Complete |A|-ary tree of directive words up to the given depth,
/// in breadth-first order starting from the root (empty directive).
inline std::vector<StandardTreeNode> standard_tree(const Alphabet& alphabet, std::size_t depth) {
    std::vector<StandardTreeNode> nodes;
    nodes.push_back({Word(alphabet), Morphism::identity(alphabet).images(), {}});
    std::size_t level_begin = 0;
    for (std::size_t d = 0; d < depth; ++d) {
        std::size_t level_end = nodes.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (std::size_t a = 0; a < alphabet.size(); ++a) {
                Word dir = nodes[i].directive + Word::single(alphabet, static_cast<Letter>(a));
                nodes[i].children.push_back(nodes.size());
                nodes.push_back({dir, psi(dir).images(), {}});
            }
        }
        level_begin = level_end;
    }
    return nodes;
}

/// A finite or eventually periodic directive word. The periodic form
/// materializes prefixes on demand, capped to keep memory bounded.
class DirectiveWord {
public:
    /// Finite directive word.
    explicit DirectiveWord(Word base) : pre_(std::move(base)), period_(pre_.alphabet()) {}

    /// Eventually periodic: preperiod then period repeated forever.
    DirectiveWord(Word preperiod, Word period)
        : pre_(std::move(preperiod)), period_(std::move(period)) {
        require_same_alphabet(pre_.alphabet(), period_.alphabet(), "directive word");
        if (period_.empty())
            throw PreconditionError("directive word: periodic form needs a nonempty period");
    }

    const Alphabet& alphabet() const { return pre_.alphabet(); }
    bool is_periodic() const { return !period_.empty(); }
    const Word& preperiod() const { return pre_; }
    const Word& period() const { return period_; }

    Letter letter_at(std::size_t i) const {
        if (i < pre_.size())
            return pre_.at(i);
        if (period_.empty())
            throw PreconditionError("directive word: index past the end of a finite directive");
        return period_.at((i - pre_.size()) % period_.size());
    }

    /// First n letters, subject to the materialization cap.
    Word prefix(std::size_t n, std::size_t cap = kDefaultCap) const {
        if (n > cap)
            throw LimitExceeded("directive word: prefix of length " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
        if (!is_periodic() && n > pre_.size())
            throw PreconditionError("directive word: prefix longer than finite directive");
        std::string idx;
        idx.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            idx.push_back(static_cast<char>(letter_at(i)));
        return Word(alphabet(), std::move(idx));
    }

    /// At least two distinct letters occur infinitely often (the shift is
    /// non-degenerate). Finite directives never qualify.
    bool non_degenerate() const {
        if (!is_periodic())
            return false;
        for (std::size_t i = 1; i < period_.size(); ++i)
            if (period_.at(i) != period_.at(0))
                return true;
        return false;
    }

    friend bool operator==(const DirectiveWord&, const DirectiveWord&) = default;

    static constexpr std::size_t kDefaultCap = 100000;

private:
    Word pre_;
    Word period_; // empty = finite directive
};

/// Incremental expansion of Pal along a directive word, together with the
/// morphisms psi and psibar of the consumed prefix. Grows monotonically;
/// one instance can serve many queries against the same shift.
class DirectiveExpansion {
public:
    explicit DirectiveExpansion(DirectiveWord d)
        : d_(std::move(d)), pal_(d_.alphabet()), bwd_(Morphism::identity(d_.alphabet())) {
        pal_lengths_.push_back(0);
        fwd_.push_back(Morphism::identity(d_.alphabet()));
    }

    const DirectiveWord& directive() const { return d_; }
    std::size_t steps() const { return pal_lengths_.size() - 1; }

    /// Pal(d[0,k)) for any already-expanded k.
    Word pal_prefix(std::size_t k) const { return pal_.prefix(pal_lengths_.at(k)); }
    std::size_t pal_length(std::size_t k) const { return pal_lengths_.at(k); }
    const Word& pal_so_far() const { return pal_; }

    /// psi of the length-k directive prefix.
    const Morphism& psi_prefix(std::size_t k) const { return fwd_.at(k); }

    /// Extends by one directive letter using Pal(ua) = Pal(u) psibar_u(a).
    void extend_once() {
        Letter a = d_.letter_at(steps());
        pal_ = pal_ + bwd_.image(a);
        pal_lengths_.push_back(pal_.size());
        fwd_.push_back(compose(fwd_.back(), elementary_psi(d_.alphabet(), a, false)));
        bwd_ = compose(bwd_, elementary_psi(d_.alphabet(), a, true));
    }

    void extend_to_steps(std::size_t n) {
        while (steps() < n)
            extend_once();
    }

    /// Extends until |Pal| >= len or the cap trips.
    void extend_until_length(std::size_t len, std::size_t cap) {
        while (pal_.size() < len) {
            if (pal_.size() > cap)
                throw LimitExceeded("directive expansion: Pal prefix exceeded cap " +
                                    std::to_string(cap));
            extend_once();
        }
    }

private:
    DirectiveWord d_;
    Word pal_;
    std::vector<Morphism> fwd_;
    Morphism bwd_;
    std::vector<std::size_t> pal_lengths_;
};

} // namespace epist

#endif
