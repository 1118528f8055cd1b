#ifndef EPIST_WORD_HPP
#define EPIST_WORD_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "epist/alphabet.hpp"
#include "epist/errors.hpp"

namespace epist {

/// Sorted start indices of a pattern inside a text, overlaps included.
using OccurrenceList = std::vector<std::size_t>;

/// An immutable finite word over one alphabet.
///
/// Symbols are stored as letter indices packed in a std::string, so equality,
/// ordering and substring search run on raw bytes.
class Word {
public:
    Word() = default;

    explicit Word(Alphabet alphabet) : alpha_(std::move(alphabet)) {}

    Word(Alphabet alphabet, std::string indices)
        : alpha_(std::move(alphabet)), sym_(std::move(indices)) {
        for (unsigned char c : sym_)
            if (c >= alpha_.size())
                throw PreconditionError("word symbol index out of alphabet range");
    }

    /// Parses a word from symbol characters, e.g. "aba".
    static Word parse(const Alphabet& alphabet, const std::string& text) {
        std::string idx;
        idx.reserve(text.size());
        for (char c : text)
            idx.push_back(static_cast<char>(alphabet.index_of(c)));
        return Word(alphabet, std::move(idx));
    }

    static Word single(const Alphabet& alphabet, Letter a) {
        if (a >= alphabet.size())
            throw PreconditionError("letter index out of alphabet range");
        return Word(alphabet, std::string(1, static_cast<char>(a)));
    }

    const Alphabet& alphabet() const { return alpha_; }
    std::size_t size() const { return sym_.size(); }
    bool empty() const { return sym_.empty(); }

    Letter at(std::size_t i) const { return static_cast<Letter>(static_cast<unsigned char>(sym_.at(i))); }
    Letter front() const { return at(0); }
    Letter back() const { return at(sym_.size() - 1); }

    /// Raw index bytes; useful for hashing and fast scans.
    const std::string& indices() const { return sym_; }

    std::string str() const {
        std::string out;
        out.reserve(sym_.size());
        for (char c : sym_)
            out.push_back(alpha_.symbol(static_cast<Letter>(static_cast<unsigned char>(c))));
        return out;
    }

    Word prefix(std::size_t len) const { return Word(alpha_, sym_.substr(0, len)); }
    Word suffix(std::size_t len) const {
        if (len > sym_.size())
            throw PreconditionError("suffix length exceeds word length");
        return Word(alpha_, sym_.substr(sym_.size() - len));
    }
    Word subword(std::size_t pos, std::size_t len) const { return Word(alpha_, sym_.substr(pos, len)); }

    bool starts_with(const Word& p) const {
        require_same_alphabet(alpha_, p.alpha_, "starts_with");
        return sym_.compare(0, p.sym_.size(), p.sym_) == 0;
    }
    bool ends_with(const Word& s) const {
        require_same_alphabet(alpha_, s.alpha_, "ends_with");
        return sym_.size() >= s.sym_.size() &&
               sym_.compare(sym_.size() - s.sym_.size(), s.sym_.size(), s.sym_) == 0;
    }

    friend Word operator+(const Word& u, const Word& v) {
        require_same_alphabet(u.alpha_, v.alpha_, "concat");
        return Word(u.alpha_, u.sym_ + v.sym_);
    }

    friend bool operator==(const Word& u, const Word& v) {
        return u.alpha_ == v.alpha_ && u.sym_ == v.sym_;
    }

    /// Lexicographic on letter indices; words from distinct alphabets are
    /// ordered by alphabet first so ordered containers stay total.
    friend bool operator<(const Word& u, const Word& v) {
        if (!(u.alpha_ == v.alpha_))
            return u.alpha_.symbols() < v.alpha_.symbols();
        return u.sym_ < v.sym_;
    }

private:
    Alphabet alpha_;
    std::string sym_;
};

inline Word concat(const Word& u, const Word& v) { return u + v; }

inline Word reverse(const Word& u) {
    std::string s(u.indices());
    std::reverse(s.begin(), s.end());
    return Word(u.alphabet(), std::move(s));
}

inline bool is_palindrome(const Word& u) {
    const std::string& s = u.indices();
    return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

/// Longest common prefix of u and v.
inline Word gcp(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet(), "gcp");
    const std::string& a = u.indices();
    const std::string& b = v.indices();
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[i] == b[i])
        ++i;
    return u.prefix(i);
}

/// Longest common suffix of u and v.
inline Word gcs(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet(), "gcs");
    const std::string& a = u.indices();
    const std::string& b = v.indices();
    std::size_t n = std::min(a.size(), b.size());
    std::size_t i = 0;
    while (i < n && a[a.size() - 1 - i] == b[b.size() - 1 - i])
        ++i;
    return u.suffix(i);
}

/// All start indices of pattern in text, overlapping occurrences included.
inline OccurrenceList occurrences(const Word& pattern, const Word& text) {
    require_same_alphabet(pattern.alphabet(), text.alphabet(), "occurrences");
    if (pattern.empty())
        throw PreconditionError("occurrences: empty pattern");
    OccurrenceList out;
    const std::string& t = text.indices();
    const std::string& p = pattern.indices();
    for (std::size_t pos = t.find(p); pos != std::string::npos; pos = t.find(p, pos + 1))
        out.push_back(pos);
    return out;
}

/// w with prefix p removed; throws when p is not a prefix.
inline Word strip_prefix(const Word& w, const Word& p) {
    if (!w.starts_with(p))
        throw PreconditionError("strip_prefix: not a prefix");
    return w.subword(p.size(), w.size() - p.size());
}

/// w with suffix s removed; throws when s is not a suffix.
inline Word strip_suffix(const Word& w, const Word& s) {
    if (!w.ends_with(s))
        throw PreconditionError("strip_suffix: not a suffix");
    return w.prefix(w.size() - s.size());
}

} // namespace epist

#endif
