#ifndef EPIST_PRESERVATION_HPP
#define EPIST_PRESERVATION_HPP

#include <optional>

#include "epist/returns.hpp"

namespace epist {

/// Outcome of testing sigma(R(u)) = R(sigma(u)) and its right-sided dual.
struct PreservationVerdict {
    Word u;
    bool holds_P{};
    bool holds_P_prime{};
    std::set<Word> lhs; // sigma(R(u))
    std::set<Word> rhs; // R(sigma(u))
    std::optional<Word> witness; // element of the symmetric difference when failing
};

struct PreservationOptions {
    bool cross_check_oracle = false;
};

inline PreservationVerdict check_preservation(ReturnsEngine& engine, const Word& u,
                                              const PreservationOptions& opts = {}) {
    const Morphism& sigma = engine.morphism();
    ReturnComputation ru = engine.returns_closed_form(u);
    ReturnComputation rsu = engine.returns_closed_form(sigma.apply(u));

    if (opts.cross_check_oracle) {
        ReturnComputation oracle_u = returns_oracle_both(sigma, u);
        ReturnComputation oracle_su = returns_oracle_both(sigma, sigma.apply(u));
        if (oracle_u.left_returns != ru.left_returns ||
            oracle_u.right_returns != ru.right_returns ||
            oracle_su.left_returns != rsu.left_returns ||
            oracle_su.right_returns != rsu.right_returns)
            throw TheoryViolation("check_preservation: oracle disagrees with the closed form "
                                  "(oracle window too short, or a genuine bug)");
    }

    PreservationVerdict v;
    v.u = u;
    for (const Word& r : ru.left_returns)
        v.lhs.insert(sigma.apply(r));
    v.rhs = rsu.left_returns;
    v.holds_P = v.lhs == v.rhs;

    std::set<Word> lhs_bar;
    for (const Word& r : ru.right_returns)
        lhs_bar.insert(sigma.apply(r));
    v.holds_P_prime = lhs_bar == rsu.right_returns;

    if (v.holds_P != v.holds_P_prime)
        throw TheoryViolation("check_preservation: (P) and (P') disagree on \"" + u.str() + "\"");
    if (!v.holds_P) {
        for (const Word& w : v.lhs)
            if (!v.rhs.count(w)) {
                v.witness = w;
                break;
            }
        if (!v.witness)
            for (const Word& w : v.rhs)
                if (!v.lhs.count(w)) {
                    v.witness = w;
                    break;
                }
    }
    return v;
}

inline PreservationVerdict check_preservation(const Morphism& sigma, const Word& u,
                                              const PreservationOptions& opts = {}) {
    ReturnsEngine engine(sigma);
    return check_preservation(engine, u, opts);
}

enum class ObstructionCase { AminLeft, RightAmin }; // a_min L_n vs R_n a_min

struct ObstructionWord {
    std::size_t n{};
    ObstructionCase kind{};
    Word word;
};

/// The candidate words of the main construction: for each bispecial length
/// n <= n_max, a_min L_n when ind >= j and/or R_n a_min when ind <= m - j.
/// At least one family always applies.
inline std::vector<ObstructionWord> obstruction_words(ReturnsEngine& engine, std::size_t n_max) {
    const Morphism& sigma = engine.morphism();
    MinLetterReport min = minimal_letter(sigma);
    bool case1 = min.ind >= min.j;
    bool case2 = min.ind + min.j <= min.m;
    if (!case1 && !case2)
        throw TheoryViolation("obstruction_words: neither case applies");
    std::vector<ObstructionWord> out;
    Word amin = Word::single(sigma.alphabet(), min.a_min);
    for (std::size_t n : engine.bispecial_lengths(n_max)) {
        Word ln = engine.left_special(n); // bispecial, so L_n = R_n
        if (case1)
            out.push_back({n, ObstructionCase::AminLeft, amin + ln});
        if (case2)
            out.push_back({n, ObstructionCase::RightAmin, ln + amin});
    }
    return out;
}

inline std::vector<ObstructionWord> obstruction_words(const Morphism& sigma, std::size_t n_max) {
    ReturnsEngine engine(sigma);
    return obstruction_words(engine, n_max);
}

struct ObstructionVerdict {
    std::size_t n{};
    ObstructionCase kind{};
    Word word;
    bool holds_P{};
};

/// Verdicts of the obstruction suite: every candidate word checked against
/// (P), with the least n from which every later verdict fails.
struct ObstructionReport {
    Letter a_min{};
    std::size_t j{};
    std::size_t ind{};
    std::size_t m{};
    bool case1{}; // ind >= j
    bool case2{}; // ind <= m - j
    std::vector<ObstructionVerdict> tested;
    std::optional<std::size_t> onset;
};

inline ObstructionReport run_obstruction_suite(const Morphism& sigma, std::size_t n_max,
                                               const PreservationOptions& opts = {}) {
    if (!is_primitive(sigma))
        throw PreconditionError("run_obstruction_suite: morphism is not primitive");
    ReturnsEngine engine(sigma);
    MinLetterReport min = minimal_letter(sigma);
    ObstructionReport rep;
    rep.a_min = min.a_min;
    rep.j = min.j;
    rep.ind = min.ind;
    rep.m = min.m;
    rep.case1 = min.ind >= min.j;
    rep.case2 = min.ind + min.j <= min.m;
    for (const ObstructionWord& ow : obstruction_words(engine, n_max)) {
        PreservationVerdict v = check_preservation(engine, ow.word, opts);
        rep.tested.push_back({ow.n, ow.kind, ow.word, v.holds_P});
    }
    // least tested n from which every verdict fails
    std::optional<std::size_t> onset;
    for (auto it = rep.tested.rbegin(); it != rep.tested.rend(); ++it) {
        if (it->holds_P)
            break;
        onset = it->n;
    }
    rep.onset = onset;
    return rep;
}

/// One verified claim of the proof-supporting lemmas.
struct LemmaCheck {
    std::string name;
    bool applicable{};
    bool pass{};
    std::string detail;
};

struct LemmaChecksReport {
    std::vector<LemmaCheck> checks;
    bool inner_placement_sufficient{}; // all return words to L_k longer than m - j

    bool all_pass() const {
        for (const LemmaCheck& c : checks)
            if (c.applicable && !c.pass)
                return false;
        return true;
    }
};

/// Verifies the special-factor and inner-branch placement claims behind the
/// main construction at one bispecial length n, plus the gcs/gcp inequalities
/// sampled over short factors.
inline LemmaChecksReport lemma_checks(const Morphism& sigma, std::size_t n,
                                      std::size_t sample_len = 10) {
    if (!is_primitive(sigma))
        throw PreconditionError("lemma_checks: morphism is not primitive");
    ReturnsEngine engine(sigma);
    MinLetterReport min = minimal_letter(sigma);
    const std::size_t j = min.j;
    const std::size_t m = min.m;
    const std::size_t ind = min.ind;

    Word ln = engine.left_special(n);
    Word rn = reverse(ln);
    Word amin = Word::single(sigma.alphabet(), min.a_min);
    bool n_bispecial = is_palindrome(ln); // bispecial factors are the palindromic prefixes

    auto is_left_special = [&](const Word& w) { return engine.left_special(w.size()) == w; };
    auto is_right_special = [&](const Word& w) { return engine.left_special(w.size()) == reverse(w); };

    LemmaChecksReport rep;

    {
        LemmaCheck c{"image of a_min.L_n is left special at ind = j", ind == j, true, ""};
        if (c.applicable)
            c.pass = is_left_special(sigma.apply(amin + ln));
        rep.checks.push_back(c);
    }
    {
        LemmaCheck c{"image of a_min.R_n is right special at ind = m", ind == m, true, ""};
        if (c.applicable)
            c.pass = is_right_special(sigma.apply(amin + rn));
        rep.checks.push_back(c);
    }
    {
        LemmaCheck c{"image of R_n.a_min is right special at ind = m - j", ind + j == m, true, ""};
        if (c.applicable)
            c.pass = is_right_special(sigma.apply(rn + amin));
        rep.checks.push_back(c);
    }
    {
        LemmaCheck c{"image of L_n.a_min is left special at ind = 0", ind == 0, true, ""};
        if (c.applicable)
            c.pass = is_left_special(sigma.apply(ln + amin));
        rep.checks.push_back(c);
    }

    // inner placement (only meaningful at bispecial n, once return words to
    // L_k all exceed m - j)
    if (n_bispecial) {
        Word img = sigma.apply(amin + ln);
        std::size_t k = img.size();
        ReturnComputation rl = engine.returns_closed_form(engine.left_special(k));
        std::size_t shortest = std::size_t(-1);
        for (const Word& r : rl.left_returns)
            shortest = std::min(shortest, r.size());
        rep.inner_placement_sufficient = shortest > m - j;

        {
            LemmaCheck c{"image of a_min.L_n is the (ind - j)-th inner word",
                         ind >= j && rep.inner_placement_sufficient, true, ""};
            if (c.applicable) {
                ReturnComputation rc = engine.returns_closed_form(img);
                std::size_t uk = engine.returns_closed_form(engine.left_special(k)).ell_prime;
                c.pass = rc.ell == ind - j && rc.ell + rc.ell_prime == uk;
                c.detail = "ell = " + std::to_string(rc.ell);
            }
            rep.checks.push_back(c);
        }
        {
            LemmaCheck c{"image of R_n.a_min is the ind-th inner word (dual)",
                         ind + j <= m && rep.inner_placement_sufficient, true, ""};
            if (c.applicable) {
                Word img2 = sigma.apply(rn + amin);
                ReturnComputation rc = engine.returns_closed_form(img2);
                std::size_t k2 = img2.size();
                std::size_t uk2 = engine.returns_closed_form(engine.left_special(k2)).ell_prime;
                c.pass = rc.ell == ind && rc.ell + rc.ell_prime == uk2;
                c.detail = "ell = " + std::to_string(rc.ell);
            }
            rep.checks.push_back(c);
        }
    }

    // gcs/gcp inequalities over all short factors
    {
        LemmaCheck c{"gcs/gcp bounds with equality exactly at special factors", true, true, ""};
        for (std::size_t len = 1; len <= sample_len && c.pass; ++len) {
            // factors of length len sampled as windows of a long special prefix
            Word window = engine.left_special(std::min<std::size_t>(400, 40 * len + 40));
            std::set<Word> sample;
            for (std::size_t i = 0; i + len <= window.size(); ++i)
                sample.insert(window.subword(i, len));
            for (const Word& u : sample) {
                ReturnComputation rc = engine.returns_closed_form(u);
                bool left_sp = is_left_special(u);
                bool right_sp = is_right_special(u);
                std::vector<Word> left(rc.left_returns.begin(), rc.left_returns.end());
                std::vector<Word> right(rc.right_returns.begin(), rc.right_returns.end());
                for (std::size_t x = 0; x < left.size() && c.pass; ++x)
                    for (std::size_t y = x + 1; y < left.size() && c.pass; ++y) {
                        Word rs = sigma.apply(left[x]) + sigma.apply(left[y]);
                        Word sr = sigma.apply(left[y]) + sigma.apply(left[x]);
                        std::size_t g = gcs(rs, sr).size();
                        if (g < ind || (g == ind) != left_sp) {
                            c.pass = false;
                            c.detail = "left bound fails at \"" + u.str() + "\"";
                        }
                    }
                for (std::size_t x = 0; x < right.size() && c.pass; ++x)
                    for (std::size_t y = x + 1; y < right.size() && c.pass; ++y) {
                        Word rs = sigma.apply(right[x]) + sigma.apply(right[y]);
                        Word sr = sigma.apply(right[y]) + sigma.apply(right[x]);
                        std::size_t g = gcp(rs, sr).size();
                        if (g + ind < m || (g + ind == m) != right_sp) {
                            c.pass = false;
                            c.detail = "right bound fails at \"" + u.str() + "\"";
                        }
                    }
            }
        }
        rep.checks.push_back(c);
    }
    return rep;
}

} // namespace epist

#endif
