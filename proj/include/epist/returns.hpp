#ifndef EPIST_RETURNS_HPP
#define EPIST_RETURNS_HPP

#include <set>

#include "epist/conjugacy.hpp"
#include "epist/rauzy.hpp"

namespace epist {

enum class Side { Left, Right };

/// Directive word of the shift X_sigma, in periodic form: the period is
/// u pi(u) ... pi^{k-1}(u) read off the standard conjugate psi_u o pi,
/// with k the order of pi.
inline DirectiveWord directive_word(const Morphism& sigma) {
    if (!is_primitive(sigma))
        throw PreconditionError("directive_word: morphism is not primitive");
    auto [std_m, w] = standard_conjugate(sigma);
    DecomposeResult dec = decompose_episturmian(std_m);
    Word u = dec.decomposition->spinned.unspinned();
    if (u.empty())
        throw PreconditionError("directive_word: trivial directive (permutation input?)");
    const Permutation& p = dec.decomposition->perm;
    Word period(u.alphabet());
    Word cur = u;
    for (std::size_t i = 0; i < p.order(); ++i) {
        period = period + cur;
        cur = p.apply(cur);
    }
    DirectiveWord d(Word(u.alphabet()), period);
    if (!d.non_degenerate())
        throw TheoryViolation("directive_word: primitive morphism produced a degenerate directive");
    return d;
}

/// Location of a factor inside the palindromic prefixes of a directive word:
/// the least k with u occurring in Pal(d[0,k)), the unique occurrence index,
/// and the co-index.
struct FactorLocation {
    std::size_t steps{};     // k
    std::size_t ell{};       // occurrence index of u in Pal(d[0,k))
    std::size_t ell_prime{}; // |Pal(d[0,k))| - ell - |u|
};

/// Return sets of one factor with the data that produced them.
struct ReturnComputation {
    Word u;
    std::set<Word> left_returns;
    std::set<Word> right_returns;
    Word d;                 // directive prefix d[0,k)
    std::size_t ell{};
    std::size_t ell_prime{};
    enum class Method { Oracle, ClosedForm } method{Method::ClosedForm};
};

/// Closed-form return computation against one shift. Keeps the directive
/// expansion across queries, so repeated lookups stay cheap.
class ReturnsEngine {
public:
    explicit ReturnsEngine(const Morphism& sigma)
        : sigma_(sigma), expansion_(directive_word(sigma)) {}

    const Morphism& morphism() const { return sigma_; }
    const DirectiveWord& directive() const { return expansion_.directive(); }
    DirectiveExpansion& expansion() { return expansion_; }

    /// Least k with u a factor of Pal(d[0,k)); Justin's lemma guarantees the
    /// occurrence is unique there, which is asserted rather than assumed.
    FactorLocation locate(const Word& u) {
        if (u.empty())
            throw PreconditionError("locate: empty factor");
        require_same_alphabet(sigma_.alphabet(), u.alphabet(), "locate");
        std::size_t cap = search_cap(u.size());
        std::size_t pos;
        while (true) {
            pos = expansion_.pal_so_far().indices().find(u.indices());
            if (pos != std::string::npos && expansion_.pal_so_far().size() >= pos + u.size())
                break;
            if (expansion_.pal_so_far().size() > cap)
                throw LimitExceeded("locate: \"" + u.str() + "\" not found in Pal prefixes up to length " +
                                    std::to_string(cap) + " (not in the language?)");
            expansion_.extend_once();
        }
        std::size_t k = 0;
        while (expansion_.pal_length(k) < pos + u.size())
            ++k;
        // uniqueness within Pal(d[0,k))
        std::size_t second = expansion_.pal_so_far().indices().find(u.indices(), pos + 1);
        if (second != std::string::npos && second + u.size() <= expansion_.pal_length(k))
            throw TheoryViolation("locate: factor occurs twice in its least palindromic prefix");
        return {k, pos, expansion_.pal_length(k) - pos - u.size()};
    }

    /// Closed-form return sets of u, both sides.
    ReturnComputation returns_closed_form(const Word& u) {
        FactorLocation loc = locate(u);
        const Morphism& base = expansion_.psi_prefix(loc.steps);
        std::size_t m = expansion_.pal_length(loc.steps);
        ReturnComputation rc;
        rc.u = u;
        rc.d = expansion_.directive().prefix(loc.steps);
        rc.ell = loc.ell;
        rc.ell_prime = loc.ell_prime;
        rc.method = ReturnComputation::Method::ClosedForm;
        rc.left_returns = conjugate_images(base, loc.ell);
        rc.right_returns = conjugate_images(base, m - loc.ell_prime);
        if (rc.left_returns.size() != sigma_.alphabet().size() ||
            rc.right_returns.size() != sigma_.alphabet().size())
            throw TheoryViolation("returns_closed_form: return set is not |A| words");
        return rc;
    }

    /// Left special factor of length k (prefix of Pal(d)).
    Word left_special(std::size_t k) {
        expansion_.extend_until_length(k, search_cap(k));
        return expansion_.pal_so_far().prefix(k);
    }

    /// Lengths n <= n_max with L_n = R_n, i.e. lengths of bispecial factors.
    std::vector<std::size_t> bispecial_lengths(std::size_t n_max) {
        std::vector<std::size_t> out;
        for (std::size_t k = 0;; ++k) {
            expansion_.extend_to_steps(k);
            std::size_t len = expansion_.pal_length(k);
            if (len > n_max)
                break;
            out.push_back(len);
        }
        return out;
    }

private:
    std::size_t search_cap(std::size_t len) const {
        return std::max<std::size_t>(4096, 64 * (len + 1) + 4 * sigma_.norm());
    }

    std::set<Word> conjugate_images(const Morphism& base, std::size_t i) {
        Word w = expansion_.pal_so_far().prefix(i);
        auto conj = conjugate_right(base, w);
        if (!conj)
            throw TheoryViolation("returns_closed_form: Pal prefix failed to conjugate");
        std::set<Word> out(conj->images().begin(), conj->images().end());
        return out;
    }

    Morphism sigma_;
    DirectiveExpansion expansion_;
};

/// The i-th right conjugate of psi_u (side Right), or the i-th left
/// conjugate of its barred counterpart (side Left). The two families meet:
/// the i-th left conjugate equals the (|Pal(u)|-i)-th right one.
inline Morphism conjugate_psi(const Word& u, std::size_t i, Side side = Side::Right) {
    Word p = pal(u);
    if (i > p.size())
        throw PreconditionError("conjugate_psi: index " + std::to_string(i) + " exceeds |Pal(u)| = " +
                                std::to_string(p.size()));
    std::size_t offset = side == Side::Right ? i : p.size() - i;
    auto conj = conjugate_right(psi(u), p.prefix(offset));
    if (!conj)
        throw TheoryViolation("conjugate_psi: Pal prefix failed to conjugate");
    return *conj;
}

struct OracleLimits {
    std::size_t max_symbols = 10000000;
    std::size_t max_rounds = 60;
    // stability only counts once this many occurrences are in the window;
    // rare returns of skewed shifts show up well under half of this
    std::size_t min_occurrences = 64;
};

/// Brute-force return sets read off a long periodic-point prefix. The window
/// doubles until the sets are unchanged across two consecutive windows, every
/// return word is shorter than a quarter of the window, and enough
/// occurrences were scanned. This is the independent cross-check for the
/// closed form; it never consults it.
///
/// One scanner can serve many factors of the same shift: the scanned prefix
/// is shared and only grows.
class OracleScanner {
public:
    explicit OracleScanner(const Morphism& sigma, const OracleLimits& limits = {})
        : sigma_(sigma), limits_(limits), prefix_(sigma.alphabet()) {
        if (!is_primitive(sigma_))
            throw PreconditionError("returns_oracle: morphism is not primitive");
        auto seed = find_periodic_seed(sigma_);
        if (!seed)
            throw PreconditionError("returns_oracle: no periodic seed found");
        seed_ = *seed;
        prefix_ = Word::single(sigma_.alphabet(), seed_.letter);
    }

    const Word& prefix() const { return prefix_; }

    ReturnComputation returns_both(const Word& u) {
        if (u.empty())
            throw PreconditionError("returns_oracle: empty factor");
        require_same_alphabet(sigma_.alphabet(), u.alphabet(), "returns_oracle");
        std::set<Word> left, right;
        std::size_t window = 8 * u.size() + 64;
        std::size_t stable = 0;
        for (std::size_t round = 0; round < limits_.max_rounds; ++round) {
            ensure_length(window);
            std::size_t avail = std::min(window, prefix_.size());
            std::set<Word> l2, r2;
            std::size_t longest = 0;
            std::size_t count = 0;
            const std::string& s = prefix_.indices();
            std::size_t pos = s.find(u.indices());
            std::size_t prev = std::string::npos;
            while (pos != std::string::npos && pos + u.size() <= avail) {
                if (prev != std::string::npos) {
                    std::size_t gap = pos - prev;
                    longest = std::max(longest, gap);
                    l2.insert(prefix_.subword(prev, gap));
                    r2.insert(prefix_.subword(prev + u.size(), gap));
                }
                prev = pos;
                ++count;
                pos = s.find(u.indices(), pos + 1);
            }
            if (count == 0 && avail >= std::min<std::size_t>(limits_.max_symbols, 2000000))
                throw PreconditionError("returns_oracle: \"" + u.str() +
                                        "\" not found (not in the language?)");
            if (count >= 3 && !l2.empty()) {
                if (l2 == left && r2 == right && (longest + u.size()) * 4 < avail &&
                    count >= limits_.min_occurrences) {
                    if (++stable >= 2) {
                        ReturnComputation rc;
                        rc.u = u;
                        rc.left_returns = std::move(l2);
                        rc.right_returns = std::move(r2);
                        rc.method = ReturnComputation::Method::Oracle;
                        return rc;
                    }
                } else {
                    stable = 0;
                }
                left = std::move(l2);
                right = std::move(r2);
            }
            window *= 2;
        }
        if (left.empty())
            throw PreconditionError("returns_oracle: \"" + u.str() +
                                    "\" not found (not in the language?)");
        throw LimitExceeded("returns_oracle: return sets did not stabilize for \"" + u.str() + "\"");
    }

private:
    void ensure_length(std::size_t len) {
        while (prefix_.size() < len) {
            if (prefix_.size() > limits_.max_symbols)
                throw LimitExceeded("returns_oracle: window exceeded the symbol cap");
            Word next = prefix_;
            for (std::size_t q = 0; q < seed_.power; ++q)
                next = sigma_.apply(next);
            if (next.size() <= prefix_.size())
                throw LimitExceeded("returns_oracle: periodic point stopped growing");
            prefix_ = std::move(next);
        }
    }

    Morphism sigma_;
    OracleLimits limits_;
    PeriodicSeed seed_{};
    Word prefix_;
};

inline ReturnComputation returns_oracle_both(const Morphism& sigma, const Word& u,
                                             const OracleLimits& limits = {}) {
    OracleScanner scanner(sigma, limits);
    return scanner.returns_both(u);
}

inline std::set<Word> returns_oracle(const Morphism& sigma, const Word& u, Side side,
                                     const OracleLimits& limits = {}) {
    ReturnComputation rc = returns_oracle_both(sigma, u, limits);
    return side == Side::Left ? std::move(rc.left_returns) : std::move(rc.right_returns);
}

/// One-call closed form without engine reuse.
inline ReturnComputation returns_closed_form(const Morphism& sigma, const Word& u) {
    ReturnsEngine engine(sigma);
    return engine.returns_closed_form(u);
}

/// (d, ell, ell') recovered from a pair of distinct return words of u.
/// For left pairs ell = |gcs(rs,sr)|; for right pairs ell' = |gcp(rs,sr)|;
/// the remaining index comes from |Pal(d)| = ell + |u| + ell'.
struct DllResult {
    Word d;
    std::size_t ell{};
    std::size_t ell_prime{};
};

inline DllResult dll_from_pair(const Word& r, const Word& s, const Word& u,
                               Side side = Side::Left) {
    if (r == s)
        throw PreconditionError("dll_from_pair: the two return words must be distinct");
    Word rs = r + s;
    Word sr = s + r;
    Word x = gcs(rs, sr);
    Word y = gcp(rs, sr);
    Word bispecial = x + y;
    auto d = pal_inverse(bispecial);
    if (!d)
        throw PreconditionError("dll_from_pair: gcs.gcp is not a palindromic-closure value "
                                "(not a genuine return pair?)");
    DllResult out;
    out.d = *d;
    if (side == Side::Left) {
        out.ell = x.size();
        if (y.size() < u.size())
            throw PreconditionError("dll_from_pair: gcp shorter than the factor");
        out.ell_prime = y.size() - u.size();
    } else {
        if (x.size() < u.size())
            throw PreconditionError("dll_from_pair: gcs shorter than the factor");
        out.ell = x.size() - u.size();
        out.ell_prime = y.size();
    }
    // the factor must sit exactly once at index ell in the recovered bispecial
    OccurrenceList occ = occurrences(u, bispecial);
    if (occ.size() != 1 || occ[0] != out.ell)
        throw PreconditionError("dll_from_pair: factor does not occur exactly once at the gcs index");
    return out;
}

/// Placement of a factor on its Rauzy graph, with the (d, ell, ell') data.
/// Inner words get their index on the inner branch; the closed form is
/// cross-checked against the branch position.
struct InnerWordData {
    bool is_inner{};
    std::size_t inner_index{}; // meaningful when is_inner
    Word d;
    std::size_t ell{};
    std::size_t ell_prime{};
};

inline InnerWordData inner_word_data(const Morphism& sigma, const Word& w,
                                     const LanguageLimits& limits = {}) {
    RauzyGraph g = rauzy_graph(sigma, w.size(), limits);
    auto it = std::find(g.vertices.begin(), g.vertices.end(), w);
    if (it == g.vertices.end())
        throw PreconditionError("inner_word_data: \"" + w.str() + "\" is not in the language");
    std::size_t v = static_cast<std::size_t>(it - g.vertices.begin());

    ReturnsEngine engine(sigma);
    ReturnComputation rc = engine.returns_closed_form(w);
    InnerWordData out;
    out.d = rc.d;
    out.ell = rc.ell;
    out.ell_prime = rc.ell_prime;
    for (std::size_t i = 0; i < g.inner_vertices.size(); ++i) {
        if (g.inner_vertices[i] == v) {
            out.is_inner = true;
            out.inner_index = i;
            break;
        }
    }
    if (out.is_inner) {
        // Lemma-level cross-check: ell = branch index, ell' = |U_n| - index
        if (out.ell != out.inner_index ||
            out.ell_prime != g.inner_left.size() - out.inner_index)
            throw TheoryViolation("inner_word_data: closed form disagrees with the inner branch position");
    }
    return out;
}

} // namespace epist

#endif
