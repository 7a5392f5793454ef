#pragma once

#include <cassert>
#include <numeric>
#include <vector>

#include "braidmoves/braid_word.hpp"

namespace braidmoves {

// Permutation of {1..n} induced by a braid word (strand at start position i
// ends at position perm[i-1], 1-based values) plus its cycle decomposition.
struct ClosurePermutation {
    std::vector<int> perm;                 // perm[i] = end position of strand i (0-based arrays, 1-based values)
    std::vector<std::vector<int>> cycles;  // each cycle lists start positions, 1-based

    int components() const { return static_cast<int>(cycles.size()); }
};

inline ClosurePermutation closure_permutation(const BraidWord& b) {
    int n = b.strands();
    std::vector<int> pos(n);  // pos[i] = current position of strand i, 0-based
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<int> at(n);  // at[p] = strand currently at position p
    std::iota(at.begin(), at.end(), 0);
    for (int g : b.letters()) {
        int i = std::abs(g) - 1;  // crossing swaps positions i, i+1
        int u = at[i], v = at[i + 1];
        std::swap(at[i], at[i + 1]);
        pos[u] = i + 1;
        pos[v] = i;
    }
    ClosurePermutation cp;
    cp.perm.resize(n);
    for (int i = 0; i < n; ++i)
        cp.perm[i] = pos[i] + 1;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            cyc.push_back(j + 1);
            j = cp.perm[j] - 1;
        }
        cp.cycles.push_back(std::move(cyc));
    }
    return cp;
}

inline int component_count(const BraidWord& b) {
    return closure_permutation(b).components();
}

// Map: strand start position (0-based) -> component id (0-based).
inline std::vector<int> component_of_strand(const ClosurePermutation& cp) {
    std::vector<int> comp(cp.perm.size(), -1);
    for (std::size_t c = 0; c < cp.cycles.size(); ++c)
        for (int s : cp.cycles[c])
            comp[s - 1] = static_cast<int>(c);
    return comp;
}

// Symmetric matrix of pairwise linking numbers between closure components;
// diagonal unused (zero). lk(i,j) = half the signed crossing count between
// strands of components i and j.
struct LinkingMatrix {
    std::vector<std::vector<int>> lk;

    int components() const { return static_cast<int>(lk.size()); }
    int operator()(int i, int j) const { return lk[i][j]; }
};

inline LinkingMatrix linking_matrix(const BraidWord& b) {
    ClosurePermutation cp = closure_permutation(b);
    std::vector<int> comp = component_of_strand(cp);
    int m = cp.components();
    std::vector<std::vector<int>> signed_count(m, std::vector<int>(m, 0));

    int n = b.strands();
    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    for (int g : b.letters()) {
        int i = std::abs(g) - 1;
        int cu = comp[at[i]], cv = comp[at[i + 1]];
        if (cu != cv) {
            int s = g > 0 ? 1 : -1;
            signed_count[cu][cv] += s;
            signed_count[cv][cu] += s;
        }
        std::swap(at[i], at[i + 1]);
    }
    LinkingMatrix lm;
    lm.lk.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j)
                continue;
            assert(signed_count[i][j] % 2 == 0);  // closed braid: inter-component crossings pair up
            lm.lk[i][j] = signed_count[i][j] / 2;
        }
    return lm;
}

// Self-linking (Bennequin) number of the closure: deg(b) - n.
inline int self_linking(const BraidWord& b) {
    return degree(b) - b.strands();
}

// Restriction of the word to one component's strands, renumbered
// order-preservingly; letters touching other components are dropped.
inline BraidWord restrict_to_component(const BraidWord& b, int component) {
    ClosurePermutation cp = closure_permutation(b);
    std::vector<int> comp = component_of_strand(cp);
    int n = b.strands();
    int nc = 0;
    for (int i = 0; i < n; ++i)
        if (comp[i] == component)
            ++nc;
    if (nc == 0)
        throw std::invalid_argument("no such component");

    std::vector<int> at(n);
    std::iota(at.begin(), at.end(), 0);
    std::vector<int> sub;
    for (int g : b.letters()) {
        int i = std::abs(g) - 1;
        bool in_u = comp[at[i]] == component;
        bool in_v = comp[at[i + 1]] == component;
        if (in_u && in_v) {
            int rank = 0;  // component strands at positions < i
            for (int p = 0; p < i; ++p)
                if (comp[at[p]] == component)
                    ++rank;
            sub.push_back(g > 0 ? rank + 1 : -(rank + 1));
        }
        std::swap(at[i], at[i + 1]);
    }
    return BraidWord(std::max(nc, 1), std::move(sub));
}

// Per-component self-linking numbers; reassembles via
// self_linking(b) = sum tb_i + 2 * sum_{i<j} lk(i,j).
inline std::vector<int> component_tb_decomposition(const BraidWord& b) {
    int m = component_count(b);
    std::vector<int> tbs;
    tbs.reserve(m);
    for (int c = 0; c < m; ++c)
        tbs.push_back(self_linking(restrict_to_component(b, c)));
    return tbs;
}

// Euler characteristic of the Bennequin surface: n - (letter count).
inline int bennequin_surface_euler(const BraidWord& b) {
    return b.strands() - static_cast<int>(b.length());
}

}  // namespace braidmoves
