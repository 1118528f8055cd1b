#ifndef EPIST_LANGUAGE_HPP
#define EPIST_LANGUAGE_HPP

#include <optional>
#include <set>
#include <string>
#include <unordered_set>

#include "epist/morphism.hpp"

namespace epist {

/// The length-n slice of the language of X_sigma, with the iteration count
/// at which the factor set stabilized.
struct LanguageWindow {
    std::size_t n{};
    std::set<Word> factors;
    std::size_t iterations{};
};

struct LanguageLimits {
    std::size_t max_iterations = 50;
    std::size_t max_symbols = 10000000;
};

/// Exact length-n factor set of X_sigma, by iterating the morphism on a
/// periodic-point seed until the factor set repeats. The seed letter starts
/// a periodic point of period p, so the iterates p rounds apart are nested
/// prefixes; once two of those agree the set is complete, because every
/// length-n window of the next iterate sits inside the image of a
/// length-<=n factor already seen. One morphism application per round keeps
/// the final iterate within a constant factor of what stabilization needs.
inline LanguageWindow language(const Morphism& sigma, std::size_t n,
                               const LanguageLimits& limits = {}) {
    if (!is_primitive(sigma))
        throw PreconditionError("language: morphism is not primitive");
    if (n == 0)
        return {0, {Word(sigma.alphabet())}, 0};
    auto seed = find_periodic_seed(sigma);
    if (!seed)
        throw PreconditionError("language: no periodic seed found");
    const std::size_t p = seed->power;
    Word w = Word::single(sigma.alphabet(), seed->letter);

    auto window_set = [&](const Word& word) -> std::optional<std::unordered_set<std::string>> {
        if (word.size() < n)
            return std::nullopt;
        std::unordered_set<std::string> cur;
        const std::string& s = word.indices();
        for (std::size_t i = 0; i + n <= s.size(); ++i)
            cur.insert(s.substr(i, n));
        return cur;
    };

    std::vector<std::optional<std::unordered_set<std::string>>> history;
    history.push_back(window_set(w));
    std::size_t iter = 0;
    std::optional<std::unordered_set<std::string>> done;
    while (!done) {
        ++iter;
        if (iter > limits.max_iterations)
            throw LimitExceeded("language: no stabilization after " +
                                std::to_string(limits.max_iterations) + " iterations (n = " +
                                std::to_string(n) + ")");
        w = sigma.apply(w);
        if (w.size() > limits.max_symbols)
            throw LimitExceeded("language: iterate exceeded the symbol cap");
        auto cur = window_set(w);
        if (cur && iter >= p) {
            const auto& old = history[iter - p];
            if (old && *old == *cur) {
                done = std::move(cur);
                break;
            }
        }
        history.push_back(std::move(cur));
    }
    LanguageWindow out{n, {}, iter};
    for (const std::string& f : *done)
        out.factors.insert(Word(sigma.alphabet(), f));
    return out;
}

/// The unique left/right special factors of length n, when they exist.
/// A second special factor of either kind is a non-episturmian signal.
struct SpecialFactors {
    std::optional<Word> left;
    std::optional<Word> right;
    bool bispecial{false};
};

inline SpecialFactors special_factors(const Morphism& sigma, std::size_t n,
                                      const LanguageLimits& limits = {}) {
    LanguageWindow win = language(sigma, n, limits);
    LanguageWindow ext = language(sigma, n + 1, limits);
    SpecialFactors out;
    for (const Word& w : win.factors) {
        std::size_t left_ext = 0;
        std::size_t right_ext = 0;
        for (std::size_t a = 0; a < sigma.alphabet().size(); ++a) {
            Word la = Word::single(sigma.alphabet(), static_cast<Letter>(a));
            if (ext.factors.count(la + w))
                ++left_ext;
            if (ext.factors.count(w + la))
                ++right_ext;
        }
        if (left_ext >= 2) {
            if (out.left)
                throw PreconditionError("special_factors: two left special factors of length " +
                                        std::to_string(n) + " (not episturmian)");
            out.left = w;
        }
        if (right_ext >= 2) {
            if (out.right)
                throw PreconditionError("special_factors: two right special factors of length " +
                                        std::to_string(n) + " (not episturmian)");
            out.right = w;
        }
    }
    out.bispecial = out.left && out.right && *out.left == *out.right;
    return out;
}

} // namespace epist

#endif
