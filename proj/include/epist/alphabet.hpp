#ifndef EPIST_ALPHABET_HPP
#define EPIST_ALPHABET_HPP

#include <cstdint>
#include <string>

#include "epist/errors.hpp"

namespace epist {

/// Index of a letter within its alphabet.
using Letter = std::uint8_t;

/// An ordered finite set of single-character symbols, size >= 2.
///
/// Letters are handled as indices everywhere; the symbol characters only
/// matter when parsing or printing.
class Alphabet {
public:
    Alphabet() = default;

    /// Builds an alphabet from its symbol characters, in order.
    explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
        if (symbols_.size() < 2)
            throw PreconditionError("alphabet needs at least 2 letters, got \"" + symbols_ + "\"");
        if (symbols_.size() > 64)
            throw PreconditionError("alphabet too large (max 64 letters)");
        for (std::size_t i = 0; i < symbols_.size(); ++i)
            for (std::size_t j = i + 1; j < symbols_.size(); ++j)
                if (symbols_[i] == symbols_[j])
                    throw PreconditionError(std::string("duplicate letter '") + symbols_[i] +
                                            "' in alphabet");
    }

    std::size_t size() const { return symbols_.size(); }

    char symbol(Letter a) const {
        if (a >= symbols_.size())
            throw PreconditionError("letter index out of range");
        return symbols_[a];
    }

    bool contains(char c) const { return symbols_.find(c) != std::string::npos; }

    Letter index_of(char c) const {
        auto pos = symbols_.find(c);
        if (pos == std::string::npos)
            throw ParseError(std::string("symbol '") + c + "' not in alphabet \"" + symbols_ + "\"");
        return static_cast<Letter>(pos);
    }

    const std::string& symbols() const { return symbols_; }

    friend bool operator==(const Alphabet& x, const Alphabet& y) = default;

private:
    std::string symbols_;
};

inline void require_same_alphabet(const Alphabet& x, const Alphabet& y, const char* op) {
    if (!(x == y))
        throw AlphabetMismatch(std::string(op) + ": alphabets \"" + x.symbols() + "\" and \"" +
                               y.symbols() + "\" differ");
}

} // namespace epist

#endif
