#ifndef EPIST_SPINNED_HPP
#define EPIST_SPINNED_HPP

#include <string>
#include <vector>

#include "epist/morphism.hpp"

namespace epist {

/// A letter of A or of the barred copy of A.
struct SpinnedLetter {
    Letter letter{};
    bool barred{false};

    friend bool operator==(const SpinnedLetter&, const SpinnedLetter&) = default;
};

/// A word over A and its barred copy — the directive data of an
/// episturmian decomposition.
class SpinnedWord {
public:
    explicit SpinnedWord(Alphabet alphabet) : alpha_(std::move(alphabet)) {}

    SpinnedWord(Alphabet alphabet, std::vector<SpinnedLetter> letters)
        : alpha_(std::move(alphabet)), letters_(std::move(letters)) {
        for (const SpinnedLetter& s : letters_)
            if (s.letter >= alpha_.size())
                throw PreconditionError("spinned letter out of alphabet range");
    }

    /// Lifts a plain word, all spins plain.
    static SpinnedWord plain(const Word& w) {
        std::vector<SpinnedLetter> ls;
        ls.reserve(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            ls.push_back({w.at(i), false});
        return SpinnedWord(w.alphabet(), std::move(ls));
    }

    /// Parses "ab~a": a trailing '~' bars the preceding letter.
    static SpinnedWord parse(const Alphabet& alphabet, const std::string& text) {
        std::vector<SpinnedLetter> ls;
        for (char c : text) {
            if (c == '~') {
                if (ls.empty())
                    throw ParseError("spinned word: '~' with no preceding letter");
                if (ls.back().barred)
                    throw ParseError("spinned word: doubled '~'");
                ls.back().barred = true;
            } else {
                ls.push_back({alphabet.index_of(c), false});
            }
        }
        return SpinnedWord(alphabet, std::move(ls));
    }

    const Alphabet& alphabet() const { return alpha_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const SpinnedLetter& at(std::size_t i) const { return letters_.at(i); }
    const std::vector<SpinnedLetter>& letters() const { return letters_; }

    bool all_plain() const {
        for (const SpinnedLetter& s : letters_)
            if (s.barred)
                return false;
        return true;
    }

    /// The underlying word with spins dropped.
    Word unspinned() const {
        std::string idx;
        idx.reserve(letters_.size());
        for (const SpinnedLetter& s : letters_)
            idx.push_back(static_cast<char>(s.letter));
        return Word(alpha_, std::move(idx));
    }

    void push_back(SpinnedLetter s) {
        if (s.letter >= alpha_.size())
            throw PreconditionError("spinned letter out of alphabet range");
        letters_.push_back(s);
    }

    std::string str() const {
        std::string out;
        for (const SpinnedLetter& s : letters_) {
            out.push_back(alpha_.symbol(s.letter));
            if (s.barred)
                out.push_back('~');
        }
        return out;
    }

    friend SpinnedWord operator+(const SpinnedWord& u, const SpinnedWord& v) {
        require_same_alphabet(u.alpha_, v.alpha_, "spinned concat");
        std::vector<SpinnedLetter> ls = u.letters_;
        ls.insert(ls.end(), v.letters_.begin(), v.letters_.end());
        return SpinnedWord(u.alpha_, std::move(ls));
    }

    friend bool operator==(const SpinnedWord&, const SpinnedWord&) = default;

private:
    Alphabet alpha_;
    std::vector<SpinnedLetter> letters_;
};

/// Letterwise permutation action, spins preserved.
inline SpinnedWord apply(const Permutation& p, const SpinnedWord& u) {
    require_same_alphabet(p.alphabet(), u.alphabet(), "permutation on spinned word");
    std::vector<SpinnedLetter> ls;
    ls.reserve(u.size());
    for (const SpinnedLetter& s : u.letters())
        ls.push_back({p.apply(s.letter), s.barred});
    return SpinnedWord(u.alphabet(), std::move(ls));
}

/// The elementary morphism: a -> a and b -> ab for b != a
/// (barred variant maps b -> ba).
inline Morphism elementary_psi(const Alphabet& alphabet, Letter a, bool barred = false) {
    if (a >= alphabet.size())
        throw PreconditionError("elementary_psi: letter out of range");
    std::vector<Word> imgs;
    Word wa = Word::single(alphabet, a);
    for (std::size_t b = 0; b < alphabet.size(); ++b) {
        if (b == a) {
            imgs.push_back(wa);
        } else {
            Word wb = Word::single(alphabet, static_cast<Letter>(b));
            imgs.push_back(barred ? wb + wa : wa + wb);
        }
    }
    return Morphism(alphabet, std::move(imgs));
}

inline Morphism elementary_psi(const SpinnedLetter& s, const Alphabet& alphabet) {
    return elementary_psi(alphabet, s.letter, s.barred);
}

/// psi_u for a spinned word u: the left-to-right composition of the
/// elementary morphisms of its letters.
inline Morphism apply_spinned(const SpinnedWord& u) {
    Morphism m = Morphism::identity(u.alphabet());
    for (const SpinnedLetter& s : u.letters())
        m = compose(m, elementary_psi(s, u.alphabet()));
    return m;
}

/// psi_u for a plain directive word u.
inline Morphism psi(const Word& u) { return apply_spinned(SpinnedWord::plain(u)); }

/// The all-barred counterpart of psi(u).
inline Morphism psi_bar(const Word& u) {
    std::vector<SpinnedLetter> ls;
    for (std::size_t i = 0; i < u.size(); ++i)
        ls.push_back({u.at(i), true});
    return apply_spinned(SpinnedWord(u.alphabet(), std::move(ls)));
}

} // namespace epist

#endif
