#ifndef EPIST_DECOMPOSE_HPP
#define EPIST_DECOMPOSE_HPP

#include <optional>
#include <string>

#include "epist/spinned.hpp"

namespace epist {

/// A factorization sigma = psi_spinned o perm.
struct EpiDecomposition {
    SpinnedWord spinned;
    Permutation perm;
};

/// Which elementary strip to try first when both apply.
enum class StripOrder { PlainFirst, BarredFirst };

/// Outcome of decompose_episturmian. On failure, failed_step is the index of
/// the strip step at which neither a plain nor a barred factor worked.
struct DecomposeResult {
    std::optional<EpiDecomposition> decomposition;
    std::size_t failed_step{0};
    std::string reason;

    bool ok() const { return decomposition.has_value(); }
};

namespace detail {

/// De-substitution by psi_a: greedy parse of w by the code {a} + {ab : b != a}.
inline std::optional<Word> strip_plain(const Word& w, Letter a) {
    std::string out;
    const std::string& s = w.indices();
    std::size_t i = 0;
    while (i < s.size()) {
        if (static_cast<Letter>(static_cast<unsigned char>(s[i])) != a)
            return std::nullopt;
        if (i + 1 < s.size() && static_cast<Letter>(static_cast<unsigned char>(s[i + 1])) != a) {
            out.push_back(s[i + 1]);
            i += 2;
        } else {
            out.push_back(static_cast<char>(a));
            i += 1;
        }
    }
    return Word(w.alphabet(), std::move(out));
}

/// De-substitution by the barred variant: right-to-left parse by {a} + {ba : b != a}.
inline std::optional<Word> strip_barred(const Word& w, Letter a) {
    std::string out;
    const std::string& s = w.indices();
    std::size_t i = s.size();
    while (i > 0) {
        if (static_cast<Letter>(static_cast<unsigned char>(s[i - 1])) != a)
            return std::nullopt;
        if (i >= 2 && static_cast<Letter>(static_cast<unsigned char>(s[i - 2])) != a) {
            out.push_back(s[i - 2]);
            i -= 2;
        } else {
            out.push_back(static_cast<char>(a));
            i -= 1;
        }
    }
    std::reverse(out.begin(), out.end());
    return Word(w.alphabet(), std::move(out));
}

inline std::optional<Morphism> strip_elementary(const Morphism& m, SpinnedLetter s) {
    std::vector<Word> imgs;
    for (std::size_t a = 0; a < m.alphabet().size(); ++a) {
        auto img = s.barred ? strip_barred(m.image(static_cast<Letter>(a)), s.letter)
                            : strip_plain(m.image(static_cast<Letter>(a)), s.letter);
        if (!img)
            return std::nullopt;
        imgs.push_back(std::move(*img));
    }
    return Morphism(m.alphabet(), std::move(imgs));
}

} // namespace detail

/// Factors sigma as psi_v o pi by stripping elementary morphisms, or reports
/// the step at which stripping got stuck. Plain strips are attempted before
/// barred ones by default; the order only affects the spinned word produced,
/// not success (tested, not assumed).
inline DecomposeResult decompose_episturmian(const Morphism& sigma,
                                             StripOrder order = StripOrder::PlainFirst) {
    const Alphabet& alpha = sigma.alphabet();
    SpinnedWord spinned(alpha);
    Morphism m = sigma;
    std::size_t step = 0;
    while (!m.is_permutation()) {
        bool same_first = true;
        bool same_last = true;
        Letter first = m.image(0).front();
        Letter last = m.image(0).back();
        for (std::size_t a = 1; a < alpha.size(); ++a) {
            same_first = same_first && m.image(static_cast<Letter>(a)).front() == first;
            same_last = same_last && m.image(static_cast<Letter>(a)).back() == last;
        }
        std::optional<Morphism> next;
        SpinnedLetter used{};
        auto try_plain = [&]() {
            if (!same_first || next)
                return;
            if (auto stripped = detail::strip_elementary(m, {first, false})) {
                next = std::move(stripped);
                used = {first, false};
            }
        };
        auto try_barred = [&]() {
            if (!same_last || next)
                return;
            if (auto stripped = detail::strip_elementary(m, {last, true})) {
                next = std::move(stripped);
                used = {last, true};
            }
        };
        if (order == StripOrder::PlainFirst) {
            try_plain();
            try_barred();
        } else {
            try_barred();
            try_plain();
        }
        if (!next)
            return {std::nullopt, step, "no elementary factor strips at this step"};
        if (*next == m)
            return {std::nullopt, step, "stripping makes no progress"};
        spinned.push_back(used);
        m = std::move(*next);
        ++step;
    }
    EpiDecomposition dec{spinned, m.as_permutation()};
    // cheap reconstruction check; a mismatch here is a bug, not bad input
    if (!(compose(apply_spinned(dec.spinned), dec.perm) == sigma))
        throw TheoryViolation("decompose_episturmian: reconstruction mismatch");
    return {std::move(dec), 0, ""};
}

inline bool is_episturmian(const Morphism& sigma) {
    return decompose_episturmian(sigma).ok();
}

/// Decomposition or PreconditionError; for operations whose contract
/// requires episturmian input.
inline EpiDecomposition require_episturmian(const Morphism& sigma, const char* op) {
    DecomposeResult r = decompose_episturmian(sigma);
    if (!r.ok())
        throw PreconditionError(std::string(op) + ": morphism is not episturmian (stuck at strip step " +
                                std::to_string(r.failed_step) + ")");
    return std::move(*r.decomposition);
}

} // namespace epist

#endif
