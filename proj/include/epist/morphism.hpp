#ifndef EPIST_MORPHISM_HPP
#define EPIST_MORPHISM_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "epist/word.hpp"

namespace epist {

/// A bijection on the letters of one alphabet.
class Permutation {
public:
    explicit Permutation(Alphabet alphabet) : alpha_(std::move(alphabet)) {
        map_.resize(alpha_.size());
        for (std::size_t i = 0; i < map_.size(); ++i)
            map_[i] = static_cast<Letter>(i);
    }

    Permutation(Alphabet alphabet, std::vector<Letter> images)
        : alpha_(std::move(alphabet)), map_(std::move(images)) {
        if (map_.size() != alpha_.size())
            throw PreconditionError("permutation must map every letter");
        std::vector<bool> seen(map_.size(), false);
        for (Letter v : map_) {
            if (v >= map_.size() || seen[v])
                throw PreconditionError("permutation images are not a bijection");
            seen[v] = true;
        }
    }

    /// Builds the cycle (c0 c1 ... ck) on the given alphabet, fixing all other letters.
    static Permutation cycle(const Alphabet& alphabet, const std::string& letters) {
        Permutation p(alphabet);
        if (letters.empty())
            return p;
        for (std::size_t i = 0; i < letters.size(); ++i) {
            Letter from = alphabet.index_of(letters[i]);
            Letter to = alphabet.index_of(letters[(i + 1) % letters.size()]);
            p.map_[from] = to;
        }
        std::vector<bool> seen(p.map_.size(), false);
        for (Letter v : p.map_) {
            if (seen[v])
                throw PreconditionError("cycle letters repeat");
            seen[v] = true;
        }
        return p;
    }

    const Alphabet& alphabet() const { return alpha_; }
    Letter apply(Letter a) const { return map_.at(a); }

    Word apply(const Word& w) const {
        require_same_alphabet(alpha_, w.alphabet(), "permutation apply");
        std::string out;
        out.reserve(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            out.push_back(static_cast<char>(map_[w.at(i)]));
        return Word(alpha_, std::move(out));
    }

    Permutation inverse() const {
        std::vector<Letter> inv(map_.size());
        for (std::size_t i = 0; i < map_.size(); ++i)
            inv[map_[i]] = static_cast<Letter>(i);
        return Permutation(alpha_, std::move(inv));
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        require_same_alphabet(p.alpha_, q.alpha_, "permutation compose");
        std::vector<Letter> out(p.map_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = p.map_[q.map_[i]];
        return Permutation(p.alpha_, std::move(out));
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < map_.size(); ++i)
            if (map_[i] != i)
                return false;
        return true;
    }

    /// Order of the permutation in Perm(A) — lcm of cycle lengths.
    std::size_t order() const {
        std::size_t ord = 1;
        std::vector<bool> seen(map_.size(), false);
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (seen[i])
                continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = map_[j]) {
                seen[j] = true;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    friend bool operator==(const Permutation& p, const Permutation& q) = default;

private:
    Alphabet alpha_;
    std::vector<Letter> map_;
};

/// Nonnegative integer matrix, M[i][j] = occurrences of letter i in the image of letter j.
using IncidenceMatrix = std::vector<std::vector<std::uint64_t>>;

/// A non-erasing endomorphism of A*: one nonempty image word per letter.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::vector<Word> images)
        : alpha_(std::move(alphabet)), images_(std::move(images)) {
        if (images_.size() != alpha_.size())
            throw PreconditionError("morphism must define an image for every letter");
        for (const Word& w : images_) {
            require_same_alphabet(alpha_, w.alphabet(), "morphism image");
            if (w.empty())
                throw PreconditionError("morphism images must be nonempty");
        }
    }

    static Morphism identity(const Alphabet& alphabet) {
        std::vector<Word> imgs;
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            imgs.push_back(Word::single(alphabet, static_cast<Letter>(a)));
        return Morphism(alphabet, std::move(imgs));
    }

    const Alphabet& alphabet() const { return alpha_; }
    const Word& image(Letter a) const { return images_.at(a); }
    const std::vector<Word>& images() const { return images_; }

    Word apply(const Word& w) const {
        require_same_alphabet(alpha_, w.alphabet(), "morphism apply");
        std::string out;
        for (std::size_t i = 0; i < w.size(); ++i)
            out += images_[w.at(i)].indices();
        return Word(alpha_, std::move(out));
    }

    std::size_t norm() const {
        std::size_t n = 0;
        for (const Word& w : images_)
            n += w.size();
        return n;
    }

    bool is_permutation() const {
        std::vector<bool> seen(alpha_.size(), false);
        for (const Word& w : images_) {
            if (w.size() != 1 || seen[w.front()])
                return false;
            seen[w.front()] = true;
        }
        return true;
    }

    /// The permutation part, valid only when is_permutation().
    Permutation as_permutation() const {
        if (!is_permutation())
            throw PreconditionError("morphism is not a permutation");
        std::vector<Letter> map(alpha_.size());
        for (std::size_t a = 0; a < alpha_.size(); ++a)
            map[a] = images_[a].front();
        return Permutation(alpha_, std::move(map));
    }

    friend bool operator==(const Morphism& s, const Morphism& r) = default;

private:
    Alphabet alpha_;
    std::vector<Word> images_;
};

/// Composition: (compose(s, r))(a) = s(r(a)).
inline Morphism compose(const Morphism& s, const Morphism& r) {
    require_same_alphabet(s.alphabet(), r.alphabet(), "compose");
    std::vector<Word> imgs;
    imgs.reserve(s.alphabet().size());
    for (std::size_t a = 0; a < s.alphabet().size(); ++a)
        imgs.push_back(s.apply(r.image(static_cast<Letter>(a))));
    return Morphism(s.alphabet(), std::move(imgs));
}

inline Morphism to_morphism(const Permutation& p) {
    std::vector<Word> imgs;
    for (std::size_t a = 0; a < p.alphabet().size(); ++a)
        imgs.push_back(Word::single(p.alphabet(), p.apply(static_cast<Letter>(a))));
    return Morphism(p.alphabet(), std::move(imgs));
}

inline Morphism compose(const Morphism& s, const Permutation& p) {
    return compose(s, to_morphism(p));
}

inline IncidenceMatrix incidence_matrix(const Morphism& s) {
    std::size_t k = s.alphabet().size();
    IncidenceMatrix m(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j) {
        const Word& w = s.image(static_cast<Letter>(j));
        for (std::size_t i = 0; i < w.size(); ++i)
            ++m[w.at(i)][j];
    }
    return m;
}

/// Entrywise-positive check of M^k for some k up to the Wielandt bound
/// (|A|-1)^2 + 1, on the boolean shadow of the matrix.
inline bool is_primitive(const Morphism& s) {
    std::size_t k = s.alphabet().size();
    IncidenceMatrix m = incidence_matrix(s);
    std::vector<std::vector<bool>> b(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            b[i][j] = m[i][j] > 0;
    std::size_t bound = (k - 1) * (k - 1) + 1;
    auto positive = [&](const std::vector<std::vector<bool>>& x) {
        for (const auto& row : x)
            for (bool v : row)
                if (!v)
                    return false;
        return true;
    };
    std::vector<std::vector<bool>> p = b;
    for (std::size_t step = 1; step <= bound; ++step) {
        if (positive(p))
            return true;
        std::vector<std::vector<bool>> q(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                if (p[i][l])
                    for (std::size_t j = 0; j < k; ++j)
                        if (b[l][j])
                            q[i][j] = true;
        p = std::move(q);
    }
    return false;
}

/// Seed of a periodic point: letter a and power p with s^p(a) starting
/// with a and growing. Does not require primitivity.
struct PeriodicSeed {
    Letter letter;
    std::size_t power;
};

inline std::optional<PeriodicSeed> find_periodic_seed(const Morphism& s) {
    std::size_t k = s.alphabet().size();
    std::vector<Letter> first(k);
    for (std::size_t a = 0; a < k; ++a)
        first[a] = s.image(static_cast<Letter>(a)).front();
    // image lengths under s^p, saturating
    std::vector<std::uint64_t> len(k, 1);
    constexpr std::uint64_t kSat = std::uint64_t(1) << 62;
    for (std::size_t p = 1; p <= 2 * k; ++p) {
        std::vector<std::uint64_t> next(k, 0);
        for (std::size_t a = 0; a < k; ++a) {
            const Word& w = s.image(static_cast<Letter>(a));
            std::uint64_t sum = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                sum += len[w.at(i)];
                if (sum > kSat)
                    sum = kSat;
            }
            next[a] = sum;
        }
        len = std::move(next);
        for (std::size_t a = 0; a < k; ++a) {
            Letter x = static_cast<Letter>(a);
            for (std::size_t q = 0; q < p; ++q)
                x = first[x];
            if (x == a && len[a] > 1)
                return PeriodicSeed{static_cast<Letter>(a), p};
        }
    }
    return std::nullopt;
}

/// Prefix of length `len` of a periodic point of a primitive morphism.
inline Word periodic_point_prefix(const Morphism& s, std::size_t len) {
    if (!is_primitive(s))
        throw PreconditionError("periodic_point_prefix: morphism is not primitive");
    auto seed = find_periodic_seed(s);
    if (!seed)
        throw PreconditionError("periodic_point_prefix: no growing seed found");
    Word w = Word::single(s.alphabet(), seed->letter);
    while (w.size() < len) {
        Word next = w;
        for (std::size_t q = 0; q < seed->power; ++q)
            next = s.apply(next);
        if (next.size() <= w.size())
            throw LimitExceeded("periodic_point_prefix: iteration stopped growing");
        // s^p fixes the periodic point, so truncation keeps a genuine prefix
        w = next.size() > len ? next.prefix(len) : next;
    }
    return w;
}

/// Right conjugate by w: the morphism r with s(a)w = wr(a) for all a,
/// when every s(a)w starts with w.
inline std::optional<Morphism> conjugate_right(const Morphism& s, const Word& w) {
    require_same_alphabet(s.alphabet(), w.alphabet(), "conjugate_right");
    std::vector<Word> imgs;
    for (std::size_t a = 0; a < s.alphabet().size(); ++a) {
        Word t = s.image(static_cast<Letter>(a)) + w;
        if (!t.starts_with(w))
            return std::nullopt;
        imgs.push_back(t.subword(w.size(), t.size() - w.size()));
    }
    return Morphism(s.alphabet(), std::move(imgs));
}

/// Left conjugate by w: the morphism r with ws(a) = r(a)w for all a.
inline std::optional<Morphism> conjugate_left(const Morphism& s, const Word& w) {
    require_same_alphabet(s.alphabet(), w.alphabet(), "conjugate_left");
    std::vector<Word> imgs;
    for (std::size_t a = 0; a < s.alphabet().size(); ++a) {
        Word t = w + s.image(static_cast<Letter>(a));
        if (!t.ends_with(w))
            return std::nullopt;
        imgs.push_back(t.prefix(t.size() - w.size()));
    }
    return Morphism(s.alphabet(), std::move(imgs));
}

} // namespace epist

#endif
