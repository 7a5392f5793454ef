#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "braidmoves/braid_word.hpp"

namespace braidmoves {

// Dehornoy handle reduction. A sigma_i-handle is a subword
// sigma_i^e v sigma_i^{-e} whose interior v carries only indices > i; it
// reduces by dropping the two sigma_i letters and rewriting each interior
// sigma_{i+1}^d as sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^{e} (indices
// >= i+2 commute past and stay put). Free cancellation is the empty-
// interior case. Reducing, at every step, the handle that closes first
// (leftmost end position) is the classical terminating strategy. The
// fixpoint has no handles, so its lowest generator index occurs with a
// single sign; the word is trivial iff the fixpoint is empty. This route
// never touches normal forms and serves as an independent word-problem
// oracle for the Garside engine.
inline BraidWord handle_reduce(const BraidWord& b) {
    std::vector<int> w = b.letters();
    long guard = 0;
    const long guard_max = 4000000;
    for (;;) {
        int lo = -1, hi = -1;
        for (int j = 1; j < static_cast<int>(w.size()); ++j) {
            int i = std::abs(w[j]);
            int k = j - 1;
            while (k >= 0 && std::abs(w[k]) > i)
                --k;
            if (k >= 0 && w[k] == -w[j]) {
                lo = k;
                hi = j;
                break;
            }
        }
        if (lo < 0)
            break;
        int i = std::abs(w[lo]);
        int e = w[lo] > 0 ? 1 : -1;
        std::vector<int> next(w.begin(), w.begin() + lo);
        next.reserve(w.size() + 16);
        for (int p = lo + 1; p < hi; ++p) {
            int g = w[p];
            if (std::abs(g) == i + 1) {
                int d = g > 0 ? 1 : -1;
                next.push_back(-e * (i + 1));
                next.push_back(d * i);
                next.push_back(e * (i + 1));
            } else {
                next.push_back(g);
            }
        }
        next.insert(next.end(), w.begin() + hi + 1, w.end());
        w = std::move(next);
        if (++guard > guard_max)
            throw std::runtime_error("handle_reduce: iteration budget exceeded");
    }
    return BraidWord(b.strands(), std::move(w));
}

inline bool handle_trivial(const BraidWord& b) {
    return handle_reduce(b).empty();
}

}  // namespace braidmoves
