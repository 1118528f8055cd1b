#ifndef EPIST_RAUZY_HPP
#define EPIST_RAUZY_HPP

#include <map>
#include <vector>

#include "epist/language.hpp"

namespace epist {

/// One edge per factor of length n+1. The left label is the first letter of
/// that factor (the label in Gamma_n), the right label its last letter (the
/// label in the dual graph).
struct RauzyEdge {
    std::size_t src{};
    std::size_t dst{};
    Letter left_label{};
    Letter right_label{};
};

/// A branch is a path given by its edge sequence, with both label words.
struct RauzyBranch {
    std::vector<std::size_t> edges;
    Word left_word;  // labels read in Gamma_n
    Word right_word; // labels read in the dual graph
};

/// Rauzy graph of order n with its inner/outer branch decomposition.
/// Outer branches are keyed by the last left-label (a left extension of L_n);
/// dual_outer keys by the first right-label (a right extension of R_n).
struct RauzyGraph {
    std::size_t n{};
    std::vector<Word> vertices; // sorted
    std::vector<RauzyEdge> edges;
    std::size_t left_special{};  // index of L_n
    std::size_t right_special{}; // index of R_n
    std::vector<std::size_t> inner_vertices; // path L_n .. R_n
    std::vector<std::size_t> inner_edges;    // edge ids along that path
    Word inner_left;   // U_n
    Word inner_right;  // the dual inner label
    std::map<Letter, RauzyBranch> outer;      // V_{a,n} in .left_word
    std::map<Letter, RauzyBranch> dual_outer; // the dual labels in .right_word

    const Word& vertex(std::size_t i) const { return vertices.at(i); }
    bool bispecial() const { return left_special == right_special; }
};

inline RauzyGraph rauzy_graph(const Morphism& sigma, std::size_t n,
                              const LanguageLimits& limits = {}) {
    const Alphabet& alpha = sigma.alphabet();
    LanguageWindow win = language(sigma, n, limits);
    LanguageWindow ext = language(sigma, n + 1, limits);

    RauzyGraph g;
    g.n = n;
    g.vertices.assign(win.factors.begin(), win.factors.end());
    std::map<Word, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        index[g.vertices[i]] = i;

    std::vector<std::vector<std::size_t>> out_edges(g.vertices.size());
    std::vector<std::size_t> in_degree(g.vertices.size(), 0);
    for (const Word& w : ext.factors) {
        RauzyEdge e;
        e.src = index.at(w.prefix(n));
        e.dst = index.at(w.subword(1, n));
        e.left_label = w.front();
        e.right_label = w.back();
        out_edges[e.src].push_back(g.edges.size());
        ++in_degree[e.dst];
        g.edges.push_back(e);
    }

    // L_n / R_n from degrees; uniqueness is part of the episturmian shape
    std::optional<std::size_t> left, right;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (in_degree[i] >= 2) {
            if (left)
                throw PreconditionError("rauzy_graph: two left special vertices");
            left = i;
        }
        if (out_edges[i].size() >= 2) {
            if (right)
                throw PreconditionError("rauzy_graph: two right special vertices");
            right = i;
        }
    }
    if (!left || !right)
        throw PreconditionError("rauzy_graph: no special vertex of length " + std::to_string(n) +
                                " (degenerate shift?)");
    g.left_special = *left;
    g.right_special = *right;

    auto follow_single = [&](std::size_t v) -> std::size_t {
        if (out_edges[v].size() != 1)
            throw TheoryViolation("rauzy_graph: expected a single out-edge on a branch");
        return out_edges[v][0];
    };

    // inner branch: unique path L_n -> R_n (a single vertex when bispecial)
    g.inner_vertices.push_back(g.left_special);
    g.inner_left = Word(alpha);
    g.inner_right = Word(alpha);
    std::size_t cur = g.left_special;
    std::size_t guard = 0;
    while (cur != g.right_special) {
        std::size_t e = follow_single(cur);
        g.inner_edges.push_back(e);
        g.inner_left = g.inner_left + Word::single(alpha, g.edges[e].left_label);
        g.inner_right = g.inner_right + Word::single(alpha, g.edges[e].right_label);
        cur = g.edges[e].dst;
        g.inner_vertices.push_back(cur);
        if (++guard > g.vertices.size())
            throw TheoryViolation("rauzy_graph: inner walk does not reach the right special vertex");
    }

    // outer branches: one per out-edge of R_n, each closing at L_n
    for (std::size_t e0 : out_edges[g.right_special]) {
        RauzyBranch b;
        b.edges.push_back(e0);
        b.left_word = Word::single(alpha, g.edges[e0].left_label);
        b.right_word = Word::single(alpha, g.edges[e0].right_label);
        cur = g.edges[e0].dst;
        guard = 0;
        while (cur != g.left_special) {
            std::size_t e = follow_single(cur);
            b.edges.push_back(e);
            b.left_word = b.left_word + Word::single(alpha, g.edges[e].left_label);
            b.right_word = b.right_word + Word::single(alpha, g.edges[e].right_label);
            cur = g.edges[e].dst;
            if (++guard > g.vertices.size())
                throw TheoryViolation("rauzy_graph: outer walk does not close at the left special vertex");
        }
        Letter end_left = b.left_word.back();
        Letter start_right = b.right_word.front();
        if (g.outer.count(end_left))
            throw TheoryViolation("rauzy_graph: two outer branches end with the same letter");
        if (g.dual_outer.count(start_right))
            throw TheoryViolation("rauzy_graph: two dual outer branches start with the same letter");
        g.outer[end_left] = b;
        g.dual_outer[start_right] = b;
    }
    if (g.outer.size() != alpha.size())
        throw PreconditionError("rauzy_graph: expected |A| outer branches (strict episturmian)");

    // the decomposition must partition the vertex set
    std::size_t interior = 0;
    for (const auto& [letter, b] : g.outer)
        interior += b.edges.size() - 1;
    if (g.inner_vertices.size() + interior != g.vertices.size())
        throw TheoryViolation("rauzy_graph: branch decomposition does not partition the vertices");
    return g;
}

/// One relation of the Arnoux–Rauzy evolution that failed, as printable text.
struct EvolutionReport {
    std::size_t n{};
    bool bispecial_case{};
    Letter step_letter{};
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks the label evolution relations between the graphs of order n and n+1,
/// in both orientations.
inline EvolutionReport evolution_check(const Morphism& sigma, std::size_t n,
                                       const LanguageLimits& limits = {}) {
    const Alphabet& alpha = sigma.alphabet();
    RauzyGraph g = rauzy_graph(sigma, n, limits);
    RauzyGraph h = rauzy_graph(sigma, n + 1, limits);

    EvolutionReport rep;
    rep.n = n;
    rep.bispecial_case = g.bispecial();

    const Word& ln = g.vertex(g.left_special);
    const Word& ln1 = h.vertex(h.left_special);
    const Word& rn = g.vertex(g.right_special);
    const Word& rn1 = h.vertex(h.right_special);

    if (!ln1.starts_with(ln)) {
        rep.violations.push_back("L_{n+1} does not extend L_n");
        return rep;
    }
    Letter a = ln1.back();
    rep.step_letter = a;
    if (!(Word::single(alpha, a) + rn == rn1)) {
        rep.violations.push_back("R_{n+1} != a R_n for the step letter");
        return rep;
    }

    auto expect = [&](bool cond, const std::string& what) {
        if (!cond)
            rep.violations.push_back(what);
    };
    Word wa = Word::single(alpha, a);

    if (!g.bispecial()) {
        expect(h.inner_left + wa == g.inner_left, "U_{n+1} a != U_n");
        expect(wa + h.inner_right == g.inner_right, "a Ubar_{n+1} != Ubar_n");
        for (std::size_t b = 0; b < alpha.size(); ++b) {
            Letter lb = static_cast<Letter>(b);
            expect(h.outer.at(lb).left_word == wa + g.outer.at(lb).left_word,
                   std::string("V_{b,n+1} != a V_{b,n} at b = ") + alpha.symbol(lb));
            expect(h.dual_outer.at(lb).right_word == g.dual_outer.at(lb).right_word + wa,
                   std::string("Vbar_{b,n+1} != Vbar_{b,n} a at b = ") + alpha.symbol(lb));
        }
    } else {
        expect(h.inner_left + wa == g.outer.at(a).left_word, "U_{n+1} a != V_{a,n}");
        expect(wa + h.inner_right == g.dual_outer.at(a).right_word, "a Ubar_{n+1} != Vbar_{a,n}");
        expect(h.outer.at(a).left_word == wa, "V_{a,n+1} != a");
        expect(h.dual_outer.at(a).right_word == wa, "Vbar_{a,n+1} != a");
        for (std::size_t b = 0; b < alpha.size(); ++b) {
            Letter lb = static_cast<Letter>(b);
            if (lb == a)
                continue;
            expect(h.outer.at(lb).left_word == wa + g.outer.at(lb).left_word,
                   std::string("V_{b,n+1} != a V_{b,n} at b = ") + alpha.symbol(lb));
            expect(h.dual_outer.at(lb).right_word == g.dual_outer.at(lb).right_word + wa,
                   std::string("Vbar_{b,n+1} != Vbar_{b,n} a at b = ") + alpha.symbol(lb));
        }
    }
    return rep;
}

} // namespace epist

#endif
