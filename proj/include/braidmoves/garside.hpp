#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidmoves/braid_word.hpp"
#include "braidmoves/permutation.hpp"

namespace braidmoves {

// Left-weighted Delta-normal form: Delta^inf . f_1 ... f_k with the f_i
// non-trivial, non-Delta permutation factors and each adjacent pair
// left-weighted (F(f_i) contains S(f_{i+1})). Two words are equal in B_n
// iff their normal forms are identical.
struct NormalForm {
    int strands = 1;
    int inf = 0;
    std::vector<Permutation> factors;

    int canonical_length() const { return static_cast<int>(factors.size()); }
    int sup() const { return inf + canonical_length(); }

    bool operator==(const NormalForm& o) const {
        return strands == o.strands && inf == o.inf && factors == o.factors;
    }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }

    // Total order: (n, inf, factor count, factor permutations as sequences).
    bool operator<(const NormalForm& o) const {
        if (strands != o.strands) return strands < o.strands;
        if (inf != o.inf) return inf < o.inf;
        if (factors.size() != o.factors.size()) return factors.size() < o.factors.size();
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (factors[i] != o.factors[i])
                return factors[i] < o.factors[i];
        return false;
    }

    // Debug/log form: D^k | f1 | f2 | ... with one-line permutations.
    std::string to_string() const {
        std::string s = "D^" + std::to_string(inf);
        for (const auto& f : factors)
            s += " | " + f.to_string();
        return s;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        mix(static_cast<std::uint64_t>(strands));
        mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(inf)));
        for (const auto& f : factors)
            for (int v : f.images())
                mix(static_cast<std::uint64_t>(v));
        return h;
    }
};

struct NormalFormHash {
    std::size_t operator()(const NormalForm& nf) const { return nf.hash(); }
};

namespace detail {

// Make the pair (a, b) left-weighted: while some generator starts b but does
// not finish a, slide it from b into a. Returns true if anything moved.
inline bool make_pair_left_weighted(Permutation& a, Permutation& b) {
    bool changed = false;
    for (;;) {
        std::uint32_t movable = b.starting_set() & ~a.finishing_set();
        if (!movable)
            break;
        int i = 1;
        while (!(movable & (1u << i)))
            ++i;
        a.append_generator(i);
        b.strip_generator(i);
        changed = true;
    }
    return changed;
}

// Normalize a raw factor sequence into left-weighted form, absorbing
// identity and Delta factors.
inline void normalize_factors(int n, int& inf, std::vector<Permutation>& fs) {
    bool changed = true;
    int guard = 0;
    const int guard_max = static_cast<int>(fs.size() * fs.size()) + 4 * static_cast<int>(fs.size()) + 64;
    while (changed) {
        changed = false;
        // absorb Delta / drop identity
        for (std::size_t i = 0; i < fs.size();) {
            if (fs[i].is_identity()) {
                fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
            } else if (fs[i].is_delta()) {
                for (std::size_t j = 0; j < i; ++j)
                    fs[j] = fs[j].tau();
                fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
                ++inf;
                changed = true;
            } else {
                ++i;
            }
        }
        for (std::size_t i = 0; i + 1 < fs.size(); ++i)
            changed |= make_pair_left_weighted(fs[i], fs[i + 1]);
        ++guard;
        assert(guard < guard_max);
        (void)n;
    }
}

}  // namespace detail

inline NormalForm normal_form(const BraidWord& b) {
    int n = b.strands();
    NormalForm nf;
    nf.strands = n;

    // One factor per letter; sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}).
    // Delta^{-1} tokens then migrate to the front, twisting by tau the
    // factors they pass (tau is an involution, so only parity matters).
    std::vector<Permutation> fs;
    std::vector<int> deltas_right_of;  // parity bookkeeping, filled below
    std::vector<char> is_neg;
    fs.reserve(b.length());
    for (int g : b.letters()) {
        if (g > 0) {
            fs.push_back(Permutation::transposition(n, g));
            is_neg.push_back(0);
        } else {
            // Delta sigma_{|g|}^{-1}: post-compose transposition onto Delta.
            Permutation f = Permutation::delta(n);
            f.append_generator(-g);
            fs.push_back(f);
            is_neg.push_back(1);
        }
    }
    int inf = 0;
    int deltas_to_right = 0;
    for (std::size_t i = fs.size(); i-- > 0;) {
        if (deltas_to_right % 2 == 1)
            fs[i] = fs[i].tau();
        if (is_neg[i]) {
            --inf;
            ++deltas_to_right;
        }
    }
    nf.inf = inf;
    detail::normalize_factors(n, nf.inf, fs);
    nf.factors = std::move(fs);
    return nf;
}

// Letter expansion of a normal form (a concrete word equal to it).
inline BraidWord expand(const NormalForm& nf) {
    std::vector<int> letters;
    std::vector<int> dw = Permutation::delta(nf.strands).positive_word();
    if (nf.inf >= 0) {
        for (int k = 0; k < nf.inf; ++k)
            letters.insert(letters.end(), dw.begin(), dw.end());
    } else {
        std::vector<int> dinv(dw.rbegin(), dw.rend());
        for (int& g : dinv)
            g = -g;
        for (int k = 0; k < -nf.inf; ++k)
            letters.insert(letters.end(), dinv.begin(), dinv.end());
    }
    for (const auto& f : nf.factors) {
        std::vector<int> w = f.positive_word();
        letters.insert(letters.end(), w.begin(), w.end());
    }
    return BraidWord(nf.strands, std::move(letters));
}

// Word-problem decision via normal forms.
inline bool equal(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw std::invalid_argument("equal: strand count mismatch");
    return normal_form(a) == normal_form(b);
}

inline bool is_trivial(const BraidWord& b) {
    NormalForm nf = normal_form(b);
    return nf.inf == 0 && nf.factors.empty();
}

// The positive half twist Delta in B_n: (s1)(s2 s1)...(s_{n-1}...s1).
inline BraidWord half_twist(int n) {
    if (n < 1)
        throw std::invalid_argument("half_twist: need n >= 1");
    std::vector<int> letters;
    for (int k = 1; k < n; ++k)
        for (int i = k; i >= 1; --i)
            letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

// b = Delta^{-k} . b_plus with k = max(0, -inf) minimal and b_plus positive.
struct PositiveDecomposition {
    int delta_power;  // k >= 0
    BraidWord positive_part;
};

inline PositiveDecomposition positive_decomposition(const BraidWord& b) {
    NormalForm nf = normal_form(b);
    PositiveDecomposition pd{0, BraidWord(b.strands())};
    if (nf.inf >= 0) {
        pd.positive_part = expand(nf);
    } else {
        pd.delta_power = -nf.inf;
        NormalForm pos = nf;
        pos.inf = 0;
        pd.positive_part = expand(pos);
    }
    return pd;
}

}  // namespace braidmoves
