#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace braidmoves {

// Permutation of {0..n-1}; p[i] is the image of i. Encodes a positive
// permutation (simple Garside) braid factor: the diagram where strands at
// top positions i end at bottom positions p[i], each pair crossing at most
// once. Divisibility facts used throughout:
//   sigma_i left-divides  x  iff  p[i-1] > p[i]        (descent of p)
//   sigma_i right-divides x  iff  p^-1[i-1] > p^-1[i]  (descent of p^-1)
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(int n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }

    explicit Permutation(std::vector<int> images) : p_(std::move(images)) {}

    static Permutation identity(int n) { return Permutation(n); }

    // Longest element: i -> n-1-i; the half twist Delta.
    static Permutation delta(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = n - 1 - i;
        return Permutation(std::move(v));
    }

    // Adjacent transposition (i, i+1), 1-based generator index i.
    static Permutation transposition(int n, int i) {
        Permutation t(n);
        std::swap(t.p_[i - 1], t.p_[i]);
        return t;
    }

    int size() const { return static_cast<int>(p_.size()); }
    int operator[](int i) const { return p_[i]; }
    const std::vector<int>& images() const { return p_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (p_[i] != i)
                return false;
        return true;
    }

    bool is_delta() const {
        int n = size();
        for (int i = 0; i < n; ++i)
            if (p_[i] != n - 1 - i)
                return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(p_.size());
        for (int i = 0; i < size(); ++i)
            inv[p_[i]] = i;
        return Permutation(std::move(inv));
    }

    // Bitmask of 1-based generator indices i with p[i-1] > p[i].
    std::uint32_t descent_mask() const {
        std::uint32_t m = 0;
        for (int i = 1; i < size(); ++i)
            if (p_[i - 1] > p_[i])
                m |= (1u << i);
        return m;
    }

    // Starting set S(x): generators left-dividing the factor.
    std::uint32_t starting_set() const { return descent_mask(); }

    // Finishing set F(x): generators right-dividing the factor.
    std::uint32_t finishing_set() const { return inverse().descent_mask(); }

    // x * sigma_i: append a crossing at bottom positions i, i+1 (1-based).
    // Stays simple iff i is not in the finishing set.
    void append_generator(int i) {
        int a = -1, b = -1;
        for (int k = 0; k < size(); ++k) {
            if (p_[k] == i - 1) a = k;
            if (p_[k] == i) b = k;
        }
        assert(a >= 0 && b >= 0);
        std::swap(p_[a], p_[b]);
    }

    // sigma_i^{-1} * x: strip a leading crossing (1-based i).
    // Stays simple/positive iff i is in the starting set.
    void strip_generator(int i) { std::swap(p_[i - 1], p_[i]); }

    // Composition "this then other" (diagram stacking): result[i] = other[this[i]].
    Permutation then(const Permutation& other) const {
        assert(size() == other.size());
        std::vector<int> r(p_.size());
        for (int i = 0; i < size(); ++i)
            r[i] = other.p_[p_[i]];
        return Permutation(std::move(r));
    }

    // tau(x) = Delta^-1 x Delta: conjugation by the half twist.
    Permutation tau() const {
        int n = size();
        std::vector<int> r(p_.size());
        for (int i = 0; i < n; ++i)
            r[i] = n - 1 - p_[n - 1 - i];
        return Permutation(std::move(r));
    }

    // Crossing count of the factor (inversion number).
    int word_length() const {
        int n = size(), c = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p_[i] > p_[j])
                    ++c;
        return c;
    }

    // Canonical positive word for the factor: peel the smallest descent
    // repeatedly. Letters are 1-based generator indices, applied first-to-last.
    std::vector<int> positive_word() const {
        std::vector<int> word;
        Permutation q = *this;
        for (;;) {
            int i = 0;
            for (int k = 1; k < q.size(); ++k)
                if (q.p_[k - 1] > q.p_[k]) {
                    i = k;
                    break;
                }
            if (i == 0)
                break;
            word.push_back(i);
            q.strip_generator(i);
        }
        assert(q.is_identity());
        return word;
    }

    bool operator==(const Permutation& o) const { return p_ == o.p_; }
    bool operator!=(const Permutation& o) const { return p_ != o.p_; }
    bool operator<(const Permutation& o) const { return p_ < o.p_; }

    // One-line notation, 1-based: e.g. "2 1 3".
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i)
                s += ' ';
            s += std::to_string(p_[i] + 1);
        }
        return s;
    }

private:
    std::vector<int> p_;
};

}  // namespace braidmoves
