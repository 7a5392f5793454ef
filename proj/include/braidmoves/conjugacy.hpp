#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "braidmoves/braid_word.hpp"
#include "braidmoves/garside.hpp"
#include "braidmoves/permutation.hpp"

namespace braidmoves {

// Conjugator traces are letter sequences c = [c1..ck]; an entry with trace c
// is the element (c1..ck)^-1 . x . (c1..ck) for the swept input x.
using ConjTrace = std::vector<int>;

inline ConjTrace inverted_trace(const ConjTrace& c) {
    ConjTrace r(c.rbegin(), c.rend());
    for (int& g : r)
        g = -g;
    return r;
}

namespace detail {

inline void append_trace(ConjTrace& into, const ConjTrace& more) {
    into.insert(into.end(), more.begin(), more.end());
}

inline NormalForm renormalized(int strands, int inf, std::vector<Permutation> fs) {
    NormalForm nf;
    nf.strands = strands;
    nf.inf = inf;
    normalize_factors(strands, nf.inf, fs);
    nf.factors = std::move(fs);
    return nf;
}

// Cycling: conjugate by the initial factor tau^{-inf}(x1), rotating it to
// the back. Raises inf when anything can.
inline NormalForm cycling(const NormalForm& y, ConjTrace& trace) {
    if (y.factors.empty())
        return y;
    Permutation head = y.factors.front();
    if (y.inf % 2 != 0)
        head = head.tau();  // tau^{-inf} = tau^{inf mod 2}
    append_trace(trace, ConjTrace(head.positive_word()));
    std::vector<Permutation> fs(y.factors.begin() + 1, y.factors.end());
    fs.push_back(head);
    return renormalized(y.strands, y.inf, std::move(fs));
}

// Decycling: conjugate by the inverse of the final factor, rotating it to
// the front (through Delta^inf). Lowers sup when anything can.
inline NormalForm decycling(const NormalForm& y, ConjTrace& trace) {
    if (y.factors.empty())
        return y;
    Permutation tail = y.factors.back();
    {
        ConjTrace tw(tail.positive_word());
        append_trace(trace, inverted_trace(tw));
    }
    std::vector<Permutation> fs;
    fs.reserve(y.factors.size());
    Permutation moved = tail;
    if (y.inf % 2 != 0)
        moved = moved.tau();  // tau^{inf}
    fs.push_back(moved);
    fs.insert(fs.end(), y.factors.begin(), y.factors.end() - 1);
    return renormalized(y.strands, y.inf, std::move(fs));
}

}  // namespace detail

// A super summit representative together with the conjugator reaching it.
struct SummitResult {
    NormalForm element;
    ConjTrace trace;
};

// Iterated cycling (raises inf) and decycling (lowers sup) with repeat
// detection, per El-Rifai--Morton: once a full round makes no progress the
// element has maximal inf and minimal sup in its conjugacy class.
inline SummitResult summit(const NormalForm& start) {
    SummitResult r{start, {}};
    bool improved = true;
    while (improved) {
        improved = false;
        std::unordered_set<NormalForm, NormalFormHash> seen;
        while (!r.element.factors.empty()) {
            if (seen.count(r.element))
                break;
            seen.insert(r.element);
            int inf_before = r.element.inf;
            r.element = detail::cycling(r.element, r.trace);
            if (r.element.inf > inf_before) {
                seen.clear();
                improved = true;
            }
        }
        seen.clear();
        while (!r.element.factors.empty()) {
            if (seen.count(r.element))
                break;
            seen.insert(r.element);
            int sup_before = r.element.sup();
            r.element = detail::decycling(r.element, r.trace);
            if (r.element.sup() < sup_before) {
                seen.clear();
                improved = true;
            }
        }
    }
    return r;
}

inline SummitResult summit(const BraidWord& b) {
    return summit(normal_form(b));
}

struct SweepEntry {
    NormalForm nf;
    ConjTrace trace;  // conjugator from the swept input word
};

// The engine's conjugation sweep around a class: the super summit set when
// complete, a bounded conjugator closure otherwise.
struct ConjugacySweep {
    int strands = 1;
    bool complete = false;
    NormalForm key;  // lexicographically least swept normal form
    std::vector<SweepEntry> entries;

    const SweepEntry* find(const NormalForm& nf) const {
        for (const auto& e : entries)
            if (e.nf == nf)
                return &e;
        return nullptr;
    }

    const SweepEntry& key_entry() const {
        const SweepEntry* e = find(key);
        assert(e != nullptr);
        return *e;
    }
};

// Canonical conjugacy key. complete=false marks budget exhaustion (class
// too large, or strand count beyond the full-sweep regime); callers fall
// back to raw normal-form keys plus the bounded closure in `sweep`.
struct ConjKey {
    NormalForm nf;
    bool complete = false;

    bool operator==(const ConjKey& o) const { return nf == o.nf; }
    std::string to_string() const {
        return nf.to_string() + (complete ? "" : " (sweep truncated)");
    }
};

class ConjugacyEngine {
public:
    explicit ConjugacyEngine(int max_class_sweep = 5000, int full_sweep_max_strands = 6)
        : max_class_sweep_(max_class_sweep), full_sweep_max_strands_(full_sweep_max_strands) {
        if (max_class_sweep < 1)
            throw std::invalid_argument("max_class_sweep must be positive");
    }

    int max_class_sweep() const { return max_class_sweep_; }
    int full_sweep_max_strands() const { return full_sweep_max_strands_; }

    // Sweep the conjugacy class of b. Within the full-sweep regime
    // (n <= full_sweep_max_strands and no cap hit) the swept set is the
    // entire super summit set, closed under conjugation by all simple
    // elements preserving (inf, sup); the key is then canonical for the
    // class. Beyond the regime the closure uses single-generator
    // conjugations only and the result is flagged incomplete.
    ConjugacySweep sweep(const BraidWord& b) const {
        SummitResult s = summit(b);
        const int n = b.strands();
        const int inf_star = s.element.inf;
        const int sup_star = s.element.sup();
        const bool full_regime = n <= full_sweep_max_strands_;

        std::unordered_map<NormalForm, ConjTrace, NormalFormHash> nodes;
        std::deque<NormalForm> queue;
        nodes.emplace(s.element, s.trace);
        queue.push_back(s.element);
        bool cap_hit = false;

        const std::vector<ConjTrace>& conjugators = conjugator_words(n, full_regime);

        while (!queue.empty()) {
            NormalForm y = queue.front();
            queue.pop_front();
            std::vector<int> base = expand(y).letters();
            ConjTrace trace_y = nodes.at(y);  // by value: emplace below may rehash
            for (const ConjTrace& d : conjugators) {
                std::vector<int> w;
                w.reserve(base.size() + 2 * d.size());
                ConjTrace dinv = inverted_trace(d);
                w.insert(w.end(), dinv.begin(), dinv.end());
                w.insert(w.end(), base.begin(), base.end());
                w.insert(w.end(), d.begin(), d.end());
                NormalForm z = normal_form(BraidWord(n, std::move(w)));
                if (z.inf != inf_star || z.sup() != sup_star)
                    continue;
                if (nodes.count(z))
                    continue;
                if (static_cast<int>(nodes.size()) >= max_class_sweep_) {
                    cap_hit = true;
                    break;
                }
                ConjTrace t = trace_y;
                detail::append_trace(t, d);
                nodes.emplace(z, t);
                queue.push_back(z);
            }
            if (cap_hit)
                break;
        }

        ConjugacySweep result;
        result.strands = n;
        result.complete = full_regime && !cap_hit;
        result.entries.reserve(nodes.size());
        for (auto& [nf, trace] : nodes)
            result.entries.push_back(SweepEntry{nf, std::move(trace)});
        std::sort(result.entries.begin(), result.entries.end(),
                  [](const SweepEntry& a, const SweepEntry& b) { return a.nf < b.nf; });
        result.key = result.entries.front().nf;
        return result;
    }

    ConjKey conj_key(const BraidWord& b) const {
        ConjugacySweep s = sweep(b);
        return ConjKey{s.key, s.complete};
    }

private:
    // Conjugator alphabet per strand count: every non-identity simple
    // element in the full regime, single generators (both signs) plus the
    // half twist otherwise.
    const std::vector<ConjTrace>& conjugator_words(int n, bool full_regime) const {
        auto& cache = full_regime ? full_cache_ : atom_cache_;
        auto it = cache.find(n);
        if (it != cache.end())
            return it->second;
        std::vector<ConjTrace> words;
        if (full_regime) {
            std::vector<int> idx(n);
            for (int i = 0; i < n; ++i)
                idx[i] = i;
            do {
                Permutation p(idx);
                if (!p.is_identity())
                    words.push_back(ConjTrace(p.positive_word()));
            } while (std::next_permutation(idx.begin(), idx.end()));
        } else {
            for (int i = 1; i < n; ++i) {
                words.push_back(ConjTrace{i});
                words.push_back(ConjTrace{-i});
            }
            words.push_back(ConjTrace(Permutation::delta(n).positive_word()));
        }
        return cache.emplace(n, std::move(words)).first->second;
    }

    int max_class_sweep_;
    int full_sweep_max_strands_;
    mutable std::unordered_map<int, std::vector<ConjTrace>> full_cache_;
    mutable std::unordered_map<int, std::vector<ConjTrace>> atom_cache_;
};

}  // namespace braidmoves
